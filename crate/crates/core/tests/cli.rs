//! The `mreg` binary end to end: outputs, determinism and exit codes.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str, body: &str) -> String {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

fn mreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mreg")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = mreg(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn regnum_of_the_four_points() {
    let v = json(&["regnum", "--v", "1,1", &data("ex1-four-points.json")]);
    assert_eq!(v["regnum"], 2);
    let a = &v["a_invariants"][2];
    assert_eq!((a["value"].clone(), a["finite"].clone()), (Value::from(0), Value::from(true)));
    assert_eq!(v["a_invariants"][0]["value"], Value::Null);
    assert_eq!(v["a_invariants"][0]["finite"], false);
}

#[test]
fn check_suggests_a_vector() {
    let v = json(&["check", &data("hirzebruch-s2.json")]);
    assert_eq!(v["positive"], true);
    assert_eq!(v["suggested_v"], serde_json::json!([1, 3]));
}

#[test]
fn eight_points_end_to_end() {
    let f = data("eight-points.json");
    assert_eq!(json(&["regnum", "--v", "1,1", &f])["regnum"], 4);
    let b = json(&["points", "bregularity", "--box", "8", &f]);
    assert_eq!(b["minimal"], serde_json::json!([[4, 3]]));
    let r = json(&["points", "resvector", &f]);
    assert_eq!(r["resolution_vector"], serde_json::json!([4, 3]));
    let c = json(&["points", "connections", "--box", "10", &f]);
    assert_eq!(c["holds"], true);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["betti", "--v", "1,1", "eight-points.json"],
        vec!["regnum", "--degrees", "four-cycle.json"],
        vec!["--format", "table", "points", "hilbert", "--box", "5", "eight-points.json"],
        vec!["minvectors", "--box", "4", "four-cycle.json"],
        vec!["--format", "table", "hochster", "--i", "2", "four-cycle.json"],
    ] {
        let mut args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let last = args.pop().unwrap();
        args.push(data(&last));
        let args: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let a = mreg(&args);
        let b = mreg(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn malformed_input_exits_2() {
    let ragged = scratch(
        "ragged.json",
        r#"{"ring": {"variables": ["x", "y"], "degrees": [[1, 0], [1]]}, "ideal": ["x*y"]}"#,
    );
    assert_eq!(mreg(&["betti", &ragged]).status.code(), Some(2));
    let unknown = scratch("unknown.json", r#"{"ring": {"dims": [1]}, "ideal": [], "extra": 1}"#);
    assert_eq!(mreg(&["betti", &unknown]).status.code(), Some(2));
    assert_eq!(mreg(&["betti", &data("missing.json")]).status.code(), Some(2));
    assert_eq!(mreg(&["regnum", "--v", "1,x", &data("four-cycle.json")]).status.code(), Some(2));
    assert_eq!(mreg(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn non_positive_grading_exits_3() {
    let f = scratch(
        "negative.json",
        r#"{"ring": {"variables": ["x", "y"], "degrees": [[1], [-1]]}, "ideal": ["x*y"]}"#,
    );
    assert_eq!(mreg(&["regnum", &f]).status.code(), Some(3));
    assert_eq!(mreg(&["regnum", "--v", "1,0", &data("four-cycle.json")]).status.code(), Some(3));
    let o = mreg(&["check", &f]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["positive"], false);
}

#[test]
fn non_homogeneous_exits_4() {
    let f = scratch(
        "inhomogeneous.json",
        r#"{"ring": {"dims": [1, 1]}, "ideal": ["x0 + y0"]}"#,
    );
    assert_eq!(mreg(&["betti", &f]).status.code(), Some(4));
}

#[test]
fn resource_limits_exit_5() {
    let f = data("four-cycle.json");
    assert_eq!(mreg(&["--max-length", "1", "resolve", &f]).status.code(), Some(5));
    assert_eq!(mreg(&["--max-degree", "1", "betti", &f]).status.code(), Some(5));
    assert_eq!(mreg(&["--max-length", "2", "resolve", &f]).status.code(), Some(0));
}

#[test]
fn field_override_changes_the_coefficients() {
    let f = data("four-cycle.json");
    let q = json(&["betti", &f]);
    let p = json(&["--field", "p:2", "betti", &f]);
    assert_eq!(q, p);
    assert_eq!(mreg(&["--field", "p:4", "betti", &f]).status.code(), Some(2));
}
