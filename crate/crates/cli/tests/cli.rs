use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

const WORKED: &str = "[[1,1,1,2,2,3],[2,3,3,5,6],[4,4,4],[5,5,6],[6,6]]";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lusztig"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str], stdin: &str) -> Value {
    let out = run(args, stdin);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_kind(out: &Output) -> String {
    assert!(!out.status.success());
    let v: Value = serde_json::from_slice(&out.stderr).unwrap();
    v["error"]["kind"].as_str().unwrap().to_string()
}

#[test]
fn embed_along_both_quivers() {
    let plus = ok_json(&["embed", "--quiver", "6,1"], WORKED);
    assert_eq!(
        plus,
        json!({"n": 6, "sink": 1, "c": [[1,2,2],[1,3,1],[2,3,2],[2,5,1],[2,6,1],[3,4,3],[4,5,2],[4,6,1],[5,6,2]]})
    );
    let mid = ok_json(&["embed", "--quiver", "6,3", "--d", "6"], WORKED);
    assert_eq!(
        mid,
        json!({"n": 6, "sink": 3, "c": [[1,3,1],[1,4,2],[2,3,1],[2,4,1],[3,5,1],[3,6,1],[4,5,2],[4,6,1],[5,6,2]]})
    );
    // the default padding is the first row length
    assert_eq!(ok_json(&["embed", "--quiver", "6,3"], WORKED), mid);
}

#[test]
fn embed_accepts_full_tableau_objects() {
    let t =
        json!({"alphabet": {"kind": "unbarred", "n": 3}, "outer": [2, 1], "rows": [[1, 2], [3]]});
    let c = ok_json(&["embed", "--quiver", "3,1"], &t.to_string());
    assert_eq!(c["sink"], 1);
}

#[test]
fn transitions() {
    let d = r#"{"n":4,"sink":2,"c":[[1,3,2],[3,4,1]]}"#;
    let same = ok_json(&["transition", "--from", "4,2", "--to", "4,2"], d);
    assert_eq!(same, serde_json::from_str::<Value>(d).unwrap());
    let moved = ok_json(&["transition", "--from", "4,2", "--to", "4,1"], d);
    let back = ok_json(
        &["transition", "--from", "4,1", "--to", "4,2"],
        &moved.to_string(),
    );
    assert_eq!(back, same);
    let out = run(&["transition", "--from", "4,1", "--to", "4,2"], d);
    assert_eq!(error_kind(&out), "quiver_mismatch");
}

#[test]
fn lusztig_operators() {
    let zero = r#"{"n":4,"sink":2,"c":[]}"#;
    let out = run(&["lusztig-op", "--i", "1", "--dir", "raise"], zero);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "null");
    for route in ["direct", "tensor"] {
        let f = ok_json(
            &["lusztig-op", "--i", "3", "--dir", "lower", "--route", route],
            zero,
        );
        assert_eq!(f, json!({"n": 4, "sink": 2, "c": [[3, 4, 1]]}));
    }
    let out = run(&["lusztig-op", "--i", "4", "--dir", "f"], zero);
    assert_eq!(error_kind(&out), "index_out_of_range");
}

#[test]
fn rsk_round_trip() {
    let input = json!({
        "T": {"alphabet": {"kind": "barred", "n": 3}, "outer": [3, 1], "inner": [], "rotated": true, "rows": [[-3], [-2, -2, -1]]},
        "M": {"rows": {"kind": "barred", "n": 3}, "cols": {"kind": "unbarred", "n": 6},
              "entries": [[-3, 5, 1], [-3, 6, 1], [-2, 4, 1], [-1, 4, 2]]}
    });
    let pq = ok_json(&["rsk"], &input.to_string());
    assert_eq!(pq["P"]["outer"], json!([6, 3]));
    assert_eq!(pq["Q"]["inner"], json!([3, 1]));
    let tm = ok_json(&["rsk", "--inverse"], &pq.to_string());
    assert_eq!(tm["T"], input["T"]);
    assert_eq!(tm["M"], input["M"]);
}

#[test]
fn graphs() {
    let out = run(
        &["graph", "--lambda", "1", "--n", "3", "--format", "dot"],
        "",
    );
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 2);
    let g = ok_json(&["graph", "--lambda", "1", "--n", "2"], "");
    assert_eq!(g["edges"], json!([[0, 1, 1]]));
    let b = ok_json(&["graph", "--quiver", "3,2", "--depth", "2"], "");
    assert_eq!(b["nodes"].as_array().unwrap().len(), 10);
}

#[test]
fn node_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lusztig"))
        .args(["graph", "--lambda", "2,1", "--n", "3"])
        .env("LUSZTIG_NODE_LIMIT", "4")
        .output()
        .unwrap();
    assert_eq!(error_kind(&out), "node_limit");
}

#[test]
fn errors_are_json_objects() {
    let out = run(&["embed", "--quiver", "6,3", "--d", "5"], WORKED);
    assert_eq!(error_kind(&out), "padding_too_small");
    let out = run(&["embed", "--quiver", "6,3"], "[[2,1]]");
    assert_eq!(error_kind(&out), "not_semistandard");
    let out = run(&["embed", "--quiver", "6,6"], WORKED);
    assert_eq!(error_kind(&out), "usage");
    let out = run(&["embed", "--quiver", "6,3"], "{");
    assert_eq!(error_kind(&out), "malformed");
    let out = run(&["verify", "--suite", "nope"], "");
    assert_eq!(error_kind(&out), "usage");
}

#[test]
fn verify_a_suite() {
    let out = run(&["verify", "--suite", "rsk"], "");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("PASS rsk"));
}
