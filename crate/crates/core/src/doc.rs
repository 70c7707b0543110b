//! JSON interchange documents.
//!
//! Every table is explicit: composites are never inferred on load, so a
//! document either names every composite of every composable pair or is
//! rejected with a structural error.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// `result = g ∘ f`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposeEntry {
    pub g: String,
    pub f: String,
    pub result: String,
}

/// For `vcomp`: `a: f ⇒ g`, `b: g ⇒ h`, `result = b ⊙ a`.
/// For `hcomp`: `a` lives over 1-cells `A → B`, `b` over `B → C`, `result = b ∗ a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellComposeEntry {
    pub a: String,
    pub b: String,
    pub result: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCatDocument {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismEntry>,
    pub identities: BTreeMap<String, String>,
    pub compose: Vec<ComposeEntry>,
    pub twocells: Vec<MorphismEntry>,
    pub identity2: BTreeMap<String, String>,
    pub vcomp: Vec<CellComposeEntry>,
    pub hcomp: Vec<CellComposeEntry>,
    #[serde(rename = "W", default)]
    pub w: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidDocument {
    #[serde(default)]
    pub name: Option<String>,
    pub objects: Vec<String>,
    pub arrows: Vec<MorphismEntry>,
    pub compose: Vec<ComposeEntry>,
    pub inverse: BTreeMap<String, String>,
    pub unit: BTreeMap<String, String>,
}

/// A strict 2-functor between two [`TwoCatDocument`]s, by identifier.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorDocument {
    pub objects: BTreeMap<String, String>,
    pub morphisms: BTreeMap<String, String>,
    pub twocells: BTreeMap<String, String>,
}

/// A functor between two [`GroupoidDocument`]s.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidFunctorDocument {
    pub objects: BTreeMap<String, String>,
    pub arrows: BTreeMap<String, String>,
}

/// Pretty JSON with a trailing newline; stable across runs.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

pub fn read<T: for<'de> Deserialize<'de>>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}
