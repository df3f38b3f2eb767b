use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn welldom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_welldom"))
        .args(args)
        .env_remove("WELLDOM_BUDGET")
        .output()
        .expect("binary runs")
}

fn graph_file(contents: &str, suffix: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

const C7: &str = "# seven-cycle\n7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n";

#[test]
fn analyze_json_report() {
    let f = graph_file(C7, ".txt");
    let out = welldom(&["analyze", path(&f), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["n"], 7);
    assert_eq!(v["summary"]["well_dominated"], true);
    assert_eq!(v["summary"]["wwd_dim"], 1);
    assert_eq!(v["oracle"]["numbers"]["gamma"], 3);
}

#[test]
fn graph6_inferred_from_extension() {
    let f = graph_file("C~\n", ".g6");
    let out = welldom(&["oracle", path(&f), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["numbers"]["alpha"], 1);
    assert_eq!(v["well_dominated"], true);
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_welldom"))
        .args(["wwd", "-", "--format", "graph6", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    // the paw
    child.stdin.take().unwrap().write_all(b"Cx\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["space"], "wwd");
    assert_eq!(v["basis"]["dim"], 2);
}

#[test]
fn wcw_falls_back_to_oracle() {
    let f = graph_file("4\n0 1\n1 2\n2 3\n3 0\n", ".txt");
    let out = welldom(&["wcw", path(&f), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["source"], "oracle");
    assert_eq!(v["basis"]["dim"], 3);
}

#[test]
fn parse_error_exit_code() {
    let f = graph_file("3\n0 1\n1 x\n", ".txt");
    let out = welldom(&["analyze", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn missing_file_and_usage_errors() {
    assert_eq!(welldom(&["analyze", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(welldom(&["analyze"]).status.code(), Some(2));
    assert_eq!(welldom(&["bogus"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exit_code() {
    let f = graph_file(C7, ".txt");
    let out = welldom(&["oracle", path(&f), "--budget", "5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out.stderr.is_empty());
}

#[test]
fn budget_from_environment() {
    let f = graph_file(C7, ".txt");
    let out = Command::new(env!("CARGO_BIN_EXE_welldom"))
        .args(["oracle", path(&f)])
        .env("WELLDOM_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn fixtures_run_passes() {
    let out = welldom(&["fixtures", "--run"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("t10") && !text.contains("FAIL"));
}

#[test]
fn proptest_subcommand_is_reproducible() {
    let args = ["proptest", "--count", "40", "--max-n", "9", "--seed", "3", "--forbid", "4,5,6", "--json"];
    let a = welldom(&args);
    let b = welldom(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["graphs"], 40);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}
