//! The command-line contract: exit codes, report shape, fixtures, determinism.

mod common;

use std::fs;

use common::{bifrac, emit, schema_errors, verdict, without_timing};

#[test]
fn fixtures_round_trip_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let names = bifrac(&["fixtures", "unknown", "/dev/null"]);
    assert_eq!(names.code, 2);
    let known: Vec<String> = names.report["error"]
        .as_str()
        .unwrap()
        .split("known: ")
        .nth(1)
        .unwrap()
        .split(", ")
        .map(str::to_string)
        .collect();
    assert!(known.len() >= 20);
    for name in &known {
        let first = emit(dir.path(), name);
        let bytes = fs::read(&first).unwrap();
        let again = dir.path().join(format!("{name}-again.json"));
        bifrac(&["fixtures", name, again.to_str().unwrap()]);
        assert_eq!(bytes, fs::read(&again).unwrap(), "{name}");
        let text = String::from_utf8(bytes).unwrap();
        if text.contains("\"identity2\"") {
            let run = bifrac(&["validate", first.to_str().unwrap()]);
            assert_eq!(run.code, 0, "{name}: {}", run.stdout);
            // re-serializing the parsed document reproduces it exactly
            let doc: bifrac::doc::TwoCatDocument = serde_json::from_str(&text).unwrap();
            assert_eq!(bifrac::doc::to_pretty(&doc), text, "{name}");
        } else if text.contains("\"inverse\"") {
            let run = bifrac(&["groupoid", first.to_str().unwrap(), "--check", "saturated"]);
            assert_eq!(run.code, 0, "{name}: {}", run.stdout);
        }
    }
}

#[test]
fn check_bf_on_f3_passes() {
    let dir = tempfile::tempdir().unwrap();
    let run = bifrac(&["check-bf", emit(dir.path(), "F3").to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert_eq!(run.report["verdicts"].as_array().unwrap().len(), 7);
    assert!(schema_errors(&run).is_empty());
}

#[test]
fn check_bf_on_f4_names_the_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let run = bifrac(&["check-bf", emit(dir.path(), "F4").to_str().unwrap()]);
    assert_eq!(run.code, 1);
    let bf5 = run.report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["name"] == "BF5")
        .unwrap();
    assert_eq!(bf5["counterexample"], serde_json::json!(["mu", "p", "q"]));
}

#[test]
fn saturate_f2() {
    let dir = tempfile::tempdir().unwrap();
    let run = bifrac(&["saturate", emit(dir.path(), "F2").to_str().unwrap()]);
    assert_eq!(run.code, 0);
    assert_eq!(
        run.report["data"]["saturation"],
        serde_json::json!(["idX", "idY", "f", "g"])
    );
    assert_eq!(run.report["data"]["saturated"], false);
}

#[test]
fn malformed_documents_exit_2_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\n  \"objects\": [\"A\",\n}").unwrap();
    let run = bifrac(&["validate", bad.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    let msg = run.report["error"].as_str().unwrap();
    assert!(msg.contains("bad.json:3:"), "{msg}");

    let empty = dir.path().join("empty.json");
    fs::write(&empty, bifrac::doc::to_pretty(&bifrac::doc::TwoCatDocument::default())).unwrap();
    assert_eq!(bifrac(&["validate", empty.to_str().unwrap()]).code, 2);

    let mut doc = bifrac::fixtures::f3();
    doc.compose.pop();
    let partial = dir.path().join("partial.json");
    fs::write(&partial, bifrac::doc::to_pretty(&doc)).unwrap();
    let run = bifrac(&["check-bf", partial.to_str().unwrap()]);
    assert_eq!(run.code, 2);
    assert!(run.report["error"].as_str().unwrap().contains("compose"));

    assert_eq!(bifrac(&["validate", "/nonexistent/x.json"]).code, 2);
}

#[test]
fn broken_axioms_fail_validation() {
    let dir = tempfile::tempdir().unwrap();
    let mut doc = bifrac::fixtures::f8();
    // send tau ∗ tau to tau: interchange and units break
    for e in doc.hcomp.iter_mut() {
        if e.a == "tau" && e.b == "tau" {
            e.result = "tau".into();
        }
    }
    let path = dir.path().join("broken.json");
    fs::write(&path, bifrac::doc::to_pretty(&doc)).unwrap();
    let run = bifrac(&["validate", path.to_str().unwrap()]);
    assert_eq!(run.code, 1);
    assert_eq!(verdict(&run, "interchange"), Some(false));
    assert!(schema_errors(&run).is_empty());
    // other commands refuse it as input
    assert_eq!(bifrac(&["check-bf", path.to_str().unwrap()]).code, 2);
}

#[test]
fn equiv_on_f3() {
    let dir = tempfile::tempdir().unwrap();
    let with_w = emit(dir.path(), "F3");
    let run = bifrac(&["equiv", with_w.to_str().unwrap(), "(0,id0,w)"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.report["data"]["equivalent"], true);

    let ids = common::f3_identities_only(dir.path());
    let run = bifrac(&["equiv", ids.to_str().unwrap(), "(0,id0,w)"]);
    assert_eq!(run.code, 1);
    assert_eq!(verdict(&run, "closed_form"), Some(false));
    assert_eq!(verdict(&run, "search"), Some(false));
    assert_eq!(verdict(&run, "deciders_agree"), Some(true));

    assert_eq!(bifrac(&["equiv", ids.to_str().unwrap(), "(0,w,w)"]).code, 2);
    assert_eq!(bifrac(&["equiv", ids.to_str().unwrap(), "0,id0"]).code, 2);
}

#[test]
fn equiv_on_bf_failure_embeds_report() {
    let dir = tempfile::tempdir().unwrap();
    let run = bifrac(&["equiv", emit(dir.path(), "F4").to_str().unwrap(), "(A,idA,p)"]);
    assert_eq!(run.code, 1);
    assert_eq!(verdict(&run, "BF5"), Some(false));
}

#[test]
fn cell_eq_identical_and_distinct() {
    let dir = tempfile::tempdir().unwrap();
    let f7 = emit(dir.path(), "F7");
    let p = f7.to_str().unwrap();
    let id = "(A,idA,idA,i_idA,i_f)";
    let run = bifrac(&["cell-eq", p, "--from", "(A,idA,f)", "--to", "(A,idA,f)", id, id]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert_eq!(run.report["data"]["chain"], serde_json::json!([]));

    let tau = "(A,idA,idA,i_idA,tau)";
    let run = bifrac(&["cell-eq", p, "--from", "(A,idA,f)", "--to", "(A,idA,f)", id, tau]);
    assert_eq!(run.code, 1);
    assert!(run.report["data"]["chain"].is_null());

    let bogus = "(A,idA,idA,tau,i_f)"; // α must live over idA
    let run = bifrac(&["cell-eq", p, "--from", "(A,idA,f)", "--to", "(A,idA,f)", id, bogus]);
    assert_eq!(run.code, 2);
}

#[test]
fn induce_examples() {
    let dir = tempfile::tempdir().unwrap();
    let (f1, f2, f3) = (emit(dir.path(), "F1"), emit(dir.path(), "F2"), emit(dir.path(), "F3"));
    let id3 = emit(dir.path(), "identity-F3");
    let collapse = emit(dir.path(), "collapse-F2-F1");
    let s = |p: &std::path::PathBuf| p.to_str().unwrap().to_string();

    let run = bifrac(&["induce", &s(&f3), &s(&f3), &s(&id3)]);
    assert_eq!(run.code, 0, "{}", run.stdout);

    let run = bifrac(&["induce", &s(&f2), &s(&f1), &s(&collapse), "--xchecks"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    for x in ["X1", "X2a", "X2b", "X2c", "well_defined", "strict_square"] {
        assert_eq!(verdict(&run, x), Some(true), "{x}");
    }

    let ids = common::f3_identities_only(dir.path());
    for target in ["sat", "plain"] {
        let run = bifrac(&["induce", &s(&f3), &s(&ids), &s(&id3), "--target", target]);
        assert_eq!(run.code, 1, "{}", run.stdout);
        assert!(run.report["error"].as_str().unwrap().starts_with("w "));
        let clause = run.report["verdicts"]
            .as_array()
            .unwrap()
            .iter()
            .find(|v| v["name"] == "clause_i")
            .unwrap();
        assert_eq!(clause["counterexample"], serde_json::json!(["w"]));
    }

    // a functor file for the wrong pair of documents is an input error
    assert_eq!(bifrac(&["induce", &s(&f2), &s(&f3), &s(&collapse)]).code, 2);
}

#[test]
fn groupoid_examples() {
    let dir = tempfile::tempdir().unwrap();
    let [unit, pair, disc] = ["Unit", "Pair2", "Disc2"].map(|n| emit(dir.path(), n));
    let [cp, cd] = ["collapse-Pair2-Unit", "collapse-Disc2-Unit"].map(|n| emit(dir.path(), n));
    let s = |p: &std::path::PathBuf| p.to_str().unwrap().to_string();

    let run = bifrac(&["groupoid", &s(&pair), &s(&unit), "--check", "morita", "--functor", &s(&cp)]);
    assert_eq!(run.code, 0);
    assert_eq!(run.report["data"]["morita"], true);

    let run = bifrac(&["groupoid", &s(&disc), &s(&unit), "--check", "morita", "--functor", &s(&cd)]);
    assert_eq!(run.code, 1);
    assert_eq!(verdict(&run, "V1"), Some(true));
    assert_eq!(verdict(&run, "V2_injective"), Some(true));
    assert_eq!(verdict(&run, "V2_surjective"), Some(false));

    let run = bifrac(&["groupoid", &s(&unit), &s(&disc), &s(&pair), "--check", "prop05"]);
    assert_eq!(run.code, 0);
    let run = bifrac(&["groupoid", &s(&unit), &s(&disc), &s(&pair), "--check", "saturated"]);
    assert_eq!(run.code, 0);

    // morita needs a functor
    assert_eq!(bifrac(&["groupoid", &s(&pair), &s(&unit), "--check", "morita"]).code, 2);
}

#[test]
fn reports_are_deterministic_and_schema_valid() {
    let dir = tempfile::tempdir().unwrap();
    let f3 = emit(dir.path(), "F3");
    let f7 = emit(dir.path(), "F7");
    let p3 = f3.to_str().unwrap();
    let p7 = f7.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["validate", p3],
        vec!["check-bf", p7],
        vec!["saturate", p3],
        vec!["localize", p7],
        vec!["localize", p7, "--no-c3"],
        vec!["equiv", p3, "(0,id0,w)"],
        vec!["validate", "/nonexistent.json"],
    ];
    for args in cases {
        let a = bifrac(&args);
        let b = bifrac(&args);
        assert!(schema_errors(&a).is_empty(), "{args:?}: {:?}", schema_errors(&a));
        assert_eq!(without_timing(a.report), without_timing(b.report), "{args:?}");
    }
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let f3 = emit(dir.path(), "F3");
    let out = dir.path().join("report.json");
    let status = std::process::Command::new(env!("CARGO_BIN_EXE_bifrac"))
        .args(["--output", out.to_str().unwrap(), "check-bf", f3.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(status.stdout.is_empty());
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["command"], "check-bf");
    // no temporary files are left behind
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2);
}
