//! End-to-end tests of the command-line interface.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linkcensus"))
}

fn fixture_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_fixture_json() {
    let path = fixture_path("links1.json");
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("json output");
    assert_eq!(report["nontrivial_count"], 1);
    assert_eq!(report["total_linking"], 1);
    assert_eq!(report["entries"].as_array().unwrap().len(), 9);
}

#[test]
fn analyze_table_format() {
    let path = fixture_path("links5.json");
    let out = run(&["analyze", path.to_str().unwrap(), "--format", "table"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("nontrivial: 5"));
    assert!(text.contains("752"));
}

#[test]
fn project_reports_crossings() {
    let path = fixture_path("links2.json");
    let out = run(&["project", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("json output");
    let n = value["crossing_count"].as_u64().unwrap();
    assert!(n % 2 == 1 && n <= 9, "crossing count {n}");
    let first = &value["crossings"][0];
    assert!(first["over"].is_string());
    assert!(first["under"].is_string());
    assert!(first["order_keys"]["over"].is_string());
}

#[test]
fn matroid_reports_circuits() {
    let path = fixture_path("links3.json");
    let out = run(&["matroid", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).expect("json output");
    assert_eq!(value["circuits"].as_array().unwrap().len(), 21);
    assert_eq!(value["weak_elimination"]["failures"].as_array().unwrap().len(), 0);
    assert_eq!(value["correspondence"]["mismatches"].as_array().unwrap().len(), 0);
}

#[test]
fn sweep_is_byte_identical_across_jobs() {
    let args = |jobs: &'static str| {
        [
            "sweep", "--seed", "31", "--count", "40", "--bound", "500", "--jobs", jobs,
        ]
    };
    let one = run(&args("1"));
    let two = run(&args("2"));
    assert!(one.status.success());
    assert!(two.status.success());
    assert_eq!(stdout_of(&one), stdout_of(&two));
    assert!(!stdout_of(&one).is_empty());
}

#[test]
fn sweep_seed_env_var_overrides_flag() {
    let with_flag = run(&["sweep", "--seed", "77", "--count", "10", "--bound", "300"]);
    let with_env = bin()
        .args(["sweep", "--seed", "0", "--count", "10", "--bound", "300"])
        .env("LINKCENSUS_SEED", "77")
        .output()
        .expect("binary runs");
    assert!(with_flag.status.success());
    assert!(with_env.status.success());
    assert_eq!(stdout_of(&with_flag), stdout_of(&with_env));
}

#[test]
fn witness_writes_fixture_for_zero_budget() {
    let dir = std::env::temp_dir().join(format!("linkcensus-cli-{}", std::process::id()));
    let out = run(&[
        "witness",
        "--targets",
        "3",
        "--budget",
        "0",
        "--out-dir",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = dir.join("witness-3.json");
    let text = std::fs::read_to_string(&written).expect("witness file written");
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["metadata"]["expected_nontrivial_count"], 3);
    let fixture = std::fs::read_to_string(fixture_path("links3.json")).unwrap();
    let fixture: serde_json::Value = serde_json::from_str(&fixture).unwrap();
    assert_eq!(value["coords"], fixture["coords"]);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn fixtures_verify_passes() {
    let out = run(&["fixtures", "--verify"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("verified"));
}

#[test]
fn malformed_file_fails_cleanly() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("linkcensus-broken-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"graph": "K331", "coords": {"1": ["1/0", "0", "0"]}}"#).unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("error"), "stderr: {err}");
    std::fs::remove_file(&path).ok();
}
