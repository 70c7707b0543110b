#![allow(dead_code)]

use std::sync::Arc;

use bifrac::doc::TwoCatDocument;
use bifrac::fixtures;
use bifrac::fractions::{localize, Localization};
use bifrac::{MorClass, TwoCat};

pub fn load(doc: &TwoCatDocument) -> (TwoCat, MorClass) {
    let c = TwoCat::from_document(doc).expect("fixture loads");
    let w = MorClass::from_names(&c, &doc.w).expect("fixture W resolves");
    (c, w)
}

pub fn localized(doc: &TwoCatDocument) -> Localization {
    let (c, w) = load(doc);
    localize(Arc::new(c), w, true).expect("fixture passes (BF)")
}

/// Named BF fixtures followed by the first `n` corpus members.
pub fn bf_docs(n: usize) -> Vec<(String, TwoCatDocument)> {
    let mut out: Vec<(String, TwoCatDocument)> = fixtures::bf_twocats()
        .into_iter()
        .map(|(n, d)| (n.to_string(), d))
        .collect();
    out.extend(
        fixtures::default_corpus()
            .into_iter()
            .take(n)
            .map(|e| (e.name, e.doc)),
    );
    out
}

pub mod oracle;

/// Named fixtures (including the BF-failing one) and the full default corpus.
pub fn all_docs() -> Vec<(String, TwoCatDocument)> {
    let mut out: Vec<(String, TwoCatDocument)> = fixtures::all_twocats()
        .into_iter()
        .map(|(n, d)| (n.to_string(), d))
        .collect();
    out.extend(fixtures::default_corpus().into_iter().map(|e| (e.name, e.doc)));
    out
}

pub fn names(c: &TwoCat, w: &MorClass) -> oracle::Names {
    w.names(c).into_iter().collect()
}
