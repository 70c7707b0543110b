//! Built-in documents emitted by `bifrac fixtures`.

use bifrac::doc::to_pretty;
use bifrac::fixtures;
use bifrac::groupoids::{
    catalog_document, named_groupoid, shipped_catalogs, GroupoidFunctor, GROUPOID_NAMES,
};

const FUNCTORS: [&str; 5] = [
    "identity-F3",
    "collapse-F2-F1",
    "collapse-F3-F1",
    "collapse-Pair2-Unit",
    "collapse-Disc2-Unit",
];

fn catalog_name(names: &[String]) -> String {
    format!("catalog-{}", names.join("-"))
}

pub fn names() -> Vec<String> {
    let mut out: Vec<String> = fixtures::all_twocats()
        .iter()
        .map(|(n, _)| n.to_string())
        .collect();
    out.extend(FUNCTORS.iter().map(|s| s.to_string()));
    out.extend(GROUPOID_NAMES.iter().map(|s| s.to_string()));
    out.extend(shipped_catalogs().iter().map(|cat| {
        catalog_name(&cat.iter().map(|g| g.name.clone()).collect::<Vec<_>>())
    }));
    out
}

/// The document text for a fixture name, or `None` when unknown.
pub fn render(name: &str) -> Option<String> {
    if let Some(doc) = fixtures::twocat_by_name(name) {
        return Some(to_pretty(&doc));
    }
    match name {
        "identity-F3" => return Some(to_pretty(&fixtures::identity_f3())),
        "collapse-F2-F1" => return Some(to_pretty(&fixtures::collapse_f2_f1())),
        "collapse-F3-F1" => return Some(to_pretty(&fixtures::collapse_f3_f1())),
        _ => {}
    }
    if let Some(src) = name
        .strip_prefix("collapse-")
        .and_then(|s| s.strip_suffix("-Unit"))
    {
        let y = named_groupoid(src)?;
        let unit = named_groupoid("Unit")?;
        return Some(to_pretty(
            &GroupoidFunctor::collapse(&y, &unit).to_document(&y, &unit),
        ));
    }
    if let Some(g) = named_groupoid(name) {
        return Some(to_pretty(&g.to_document()));
    }
    shipped_catalogs()
        .into_iter()
        .find(|cat| catalog_name(&cat.iter().map(|g| g.name.clone()).collect::<Vec<_>>()) == name)
        .map(|cat| to_pretty(&catalog_document(&cat)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_renders() {
        for n in names() {
            assert!(render(&n).is_some(), "{n}");
        }
        assert!(render("F9").is_none());
    }
}
