use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treextremal"))
        .args(args)
        .env_remove("TREEXTREMAL_BUDGET")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn count_caterpillar() {
    let doc = json(&["count", "--caterpillar", "1,0"]);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "count");
    assert_eq!(doc["results"]["phi"], "17");
    assert_eq!(doc["results"]["is_caterpillar"], true);
}

#[test]
fn count_path_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    fs::write(&path, "4\n0 1\n1 2\n2 3\n").unwrap();
    let doc = json(&["count", path.to_str().unwrap()]);
    assert_eq!(doc["results"]["phi"], "10");
    assert_eq!(doc["results"]["wiener"], "10");
    assert_eq!(doc["results"]["diameter"], 3);
    assert_eq!(doc["results"]["per_vertex"], serde_json::json!(["4", "6", "6", "4"]));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "3\n0 1\n1 7\n").unwrap();
    let out = run(&["count", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    assert_eq!(run(&["extremal", "--degseq", "3,3,1,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "unknown-claim"]).status.code(), Some(2));
}

#[test]
fn extremal_five_internal() {
    let doc = json(&["extremal", "--degseq", "8,3,3,3,2,1*11", "--objective", "min"]);
    let opts = doc["results"]["optimizers"].as_array().unwrap();
    assert_eq!(opts.len(), 1);
    assert_eq!(opts[0]["caterpillar"], serde_json::json!([6, 0, 1, 1, 1]));
    assert!(doc["results"]["optimum"].is_string());
}

#[test]
fn extremal_path() {
    let doc = json(&["extremal", "--degseq", "2,2,2,1,1", "--method", "brute"]);
    let opts = doc["results"]["optimizers"].as_array().unwrap();
    assert_eq!(opts.len(), 1);
    assert_eq!(opts[0]["caterpillar"], serde_json::json!([0, 0, 0]));
    assert_eq!(opts[0]["edges"].as_array().unwrap().len(), 4);
    assert_eq!(doc["results"]["optimum"], "15");
}

#[test]
fn enumerate_rows() {
    let doc = json(&["enumerate", "--degseq", "3,2,2,1,1,1"]);
    assert_eq!(doc["results"]["count"], 2);
    let doc = json(&["enumerate", "--degseq", "2,2,1,1"]);
    assert_eq!(doc["results"]["count"], 1);
    let out = run(&["enumerate", "--degseq", "3,2,2,1,1,1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("canonical_code,y_vector_or_blank,phi,wiener"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn budget_refusal_exits_3() {
    let out = run(&["enumerate", "--degseq", "3*10,1*12"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2375880867360000"));
    let out = run(&["enumerate", "--degseq", "3,3,2,1*4", "--budget-labeled", "5"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_treextremal"))
        .args(["enumerate", "--degseq", "3,3,2,1*4"])
        .env("TREEXTREMAL_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_passes_and_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["verify", "thm-2.1", "--max-n", "9", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["results"]["status"], "pass");
    assert_eq!(doc["results"]["claim"], "thm-2.1");
    let doc = json(&["verify", "thm-4.2", "--max-n", "13"]);
    assert_eq!(doc["results"]["status"], "pass");
    let doc = json(&["verify", "wiener-correspondence", "--max-n", "7"]);
    assert_eq!(doc["results"]["status"], "report-only");
}

#[test]
fn closed_form_command() {
    let doc = json(&["closed-form", "--degseq", "3,2,2,1,1,1"]);
    assert_eq!(doc["results"]["minimizers"][0]["phi"], "24");
    let doc = json(&["closed-form", "--degseq", "3,3,3,3,2,1*6"]);
    assert_eq!(doc["results"]["case"]["case"], "III");
    assert_eq!(doc["results"]["minimizers"][0]["caterpillar"], serde_json::json!([1, 1, 0, 1, 1]));
    assert_eq!(run(&["closed-form", "--degseq", "3*6,1*8"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical() {
    let a = run(&["verify", "eq-2.1-monotonic", "--max-n", "8"]).stdout;
    let b = run(&["verify", "eq-2.1-monotonic", "--max-n", "8"]).stdout;
    assert_eq!(a, b);
}
