use std::process::{Command, Output};

use pbp::hypergraph::hypergraph_to_json;
use pbp::instances::LongCycle;

const TRIANGLE: &str = r#"{"nodes":["a","b","c"],"edges":[{"a":1,"b":1},{"b":1,"c":-1},{"a":-1,"c":1}]}"#;

fn pbp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbp")).args(args).output().expect("binary runs")
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn beta_on_triangle_is_inapplicable() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(&dir, "tri.json", TRIANGLE);
    let out = pbp(&["build", &tri, "--strategy", "beta"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not applicable"));
}

#[test]
fn analyze_long_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "lc.json", &hypergraph_to_json(&LongCycle::new(3).signed()));
    let out = pbp(&["analyze", &path]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["beta_acyclic"], false);
    assert_eq!(v["alpha_acyclic"], true);
    assert_eq!(v["rank"], 4);
}

#[test]
fn build_then_verify_saved_formulation() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(&dir, "tri.json", TRIANGLE);
    let ef = dir.path().join("ef.json");
    let out = pbp(&["build", &tri, "--out", ef.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = pbp(&["verify", &tri, "--formulation", ef.to_str().unwrap(), "--trials", "10", "--seed", "3"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn export_writes_lp() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(&dir, "tri.json", TRIANGLE);
    let out = pbp(&["export", &tri, "--strategy", "inflate_full"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Maximize") && text.contains("Bounds"));
}

#[test]
fn malformed_input_reports_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.json", r#"{"nodes":["a","b"],"edges":[{"a":2,"b":1}]}"#);
    let out = pbp(&["analyze", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("edges[0].a"));
}

#[test]
fn verify_two_components() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "two.json", &hypergraph_to_json(&pbp::instances::two_components(12)));
    let report = dir.path().join("report.json");
    let out = pbp(&["verify", &path, "--trials", "50", "--seed", "7", "--out", report.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["all_pass"], true);
}
