use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::Context;
use bifrac::report::Check;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

/// The single output shape shared by every command.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    pub status: Status,
    pub verdicts: Vec<Check>,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: u64,
}

/// What a command hands back before timing and status are filled in.
#[derive(Debug, Default)]
pub struct Outcome {
    pub verdicts: Vec<Check>,
    pub data: Value,
    /// Set when a verdict could not be reached because a precondition failed;
    /// reported with status `fail`.
    pub note: Option<String>,
}

impl Outcome {
    pub fn new(verdicts: Vec<Check>, data: Value) -> Outcome {
        Outcome {
            verdicts,
            data,
            note: None,
        }
    }

    pub fn status(&self) -> Status {
        if self.note.is_none() && self.verdicts.iter().all(|c| c.pass) {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Writes through a sibling temporary file and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .with_context(|| format!("{} is not a file path", path.display()))?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    let mut f = fs::File::create(&tmp).with_context(|| format!("cannot create {}", tmp.display()))?;
    f.write_all(contents.as_bytes())?;
    f.sync_all()?;
    fs::rename(&tmp, path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}
