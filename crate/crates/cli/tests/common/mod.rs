#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub report: Value,
    pub stdout: String,
}

pub fn bifrac(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_bifrac"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 report");
    let report = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("report is not JSON ({e}): {stdout}"));
    Run {
        code: out.status.code().expect("exit code"),
        report,
        stdout,
    }
}

/// Problems with the shape of a report, or with its status/exit-code pairing.
pub fn schema_errors(run: &Run) -> Vec<String> {
    let mut errs = Vec::new();
    let r = &run.report;
    let Some(obj) = r.as_object() else {
        return vec!["report is not an object".into()];
    };
    for key in ["command", "args", "status", "verdicts", "data", "timing_ms"] {
        if !obj.contains_key(key) {
            errs.push(format!("missing `{key}`"));
        }
    }
    let allowed = ["command", "args", "status", "verdicts", "data", "timing_ms", "error"];
    for key in obj.keys().filter(|k| !allowed.contains(&k.as_str())) {
        errs.push(format!("unexpected `{key}`"));
    }
    if !r["command"].is_string() {
        errs.push("`command` is not a string".into());
    }
    if !r["args"].as_array().is_some_and(|a| a.iter().all(Value::is_string)) {
        errs.push("`args` is not a list of strings".into());
    }
    if !r["timing_ms"].is_u64() {
        errs.push("`timing_ms` is not a non-negative integer".into());
    }
    let expected_code = match r["status"].as_str() {
        Some("pass") => 0,
        Some("fail") => 1,
        Some("error") => 2,
        _ => {
            errs.push("`status` is not pass/fail/error".into());
            -1
        }
    };
    if expected_code != run.code {
        errs.push(format!("status {} with exit code {}", r["status"], run.code));
    }
    match r["verdicts"].as_array() {
        None => errs.push("`verdicts` is not a list".into()),
        Some(vs) => {
            for v in vs {
                let named = v["name"].is_string() && v["pass"].is_boolean();
                let witness = match v.get("counterexample") {
                    None => v["pass"] == Value::Bool(true),
                    Some(c) => {
                        v["pass"] == Value::Bool(false)
                            && c.as_array().is_some_and(|a| a.iter().all(Value::is_string))
                    }
                };
                if !named || !witness {
                    errs.push(format!("malformed verdict {v}"));
                }
            }
            let all_pass = vs.iter().all(|v| v["pass"] == Value::Bool(true));
            if expected_code == 0 && !all_pass {
                errs.push("status pass with a failing verdict".into());
            }
        }
    }
    if expected_code == 2 && !r["error"].is_string() {
        errs.push("error status without an error message".into());
    }
    errs
}

pub fn verdict(run: &Run, name: &str) -> Option<bool> {
    run.report["verdicts"]
        .as_array()?
        .iter()
        .find(|v| v["name"] == name)
        .and_then(|v| v["pass"].as_bool())
}

pub fn emit(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let run = bifrac(&["fixtures", name, path.to_str().unwrap()]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    path
}

pub fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

/// F3 with `W` reduced to its identities.
pub fn f3_identities_only(dir: &Path) -> PathBuf {
    let mut doc = bifrac::fixtures::f3();
    doc.w.retain(|m| m != "w");
    let path = dir.join("F3-ids.json");
    std::fs::write(&path, bifrac::doc::to_pretty(&doc)).unwrap();
    path
}
