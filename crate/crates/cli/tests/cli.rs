//! End-to-end tests of the `ferrers` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn ferrers(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ferrers")).args(args).output().expect("binary runs")
}

fn with_data(args: &[&str], file: &str) -> Output {
    let path = data(file);
    let mut all: Vec<&str> = vec![args[0], path.to_str().unwrap()];
    all.extend(&args[1..]);
    ferrers(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn standardize_reproduces_the_standard_tableau() {
    let o = with_data(&["standardize"], "table_a.txt");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(data("table_b.txt")).unwrap());
}

#[test]
fn check_reports_standardizability() {
    let o = with_data(&["check"], "standardizable_3d.json");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("standardizable: true"));

    let o = with_data(&["check", "--format", "json"], "nonstandardizable_4d.json");
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["result"]["standardizable"], false);
    assert_eq!(v["result"]["size"], 95);
    assert!(v["result"]["witness"]["missing"].is_array());
}

#[test]
fn closure_lists_points() {
    let o = with_data(&["closure", "--format", "json"], "staircase.json");
    let v = json(&o);
    assert_eq!(v["result"]["size"], 3);
    assert_eq!(v["result"]["maximal_points"], serde_json::json!([[1, 2], [2, 1]]));
}

#[test]
fn fiber_gb_verifies_square() {
    let o = with_data(&["fiber-gb", "--r", "2", "--verify"], "square.json");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verified: true"));
}

#[test]
fn fiber_gb_fails_completeness_on_nonstandardizable_diagram() {
    let o = with_data(&["fiber-gb", "--r", "1", "--verify", "--format", "json"], "nonstandardizable_4d.json");
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let rep = &v["result"]["verification"];
    assert_eq!(rep["sound"], true);
    assert_eq!(rep["complete_at_degree"], false);
    assert!(!rep["failing_witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn rees_gb_counts() {
    let o = with_data(&["rees-gb", "--r", "1", "--verify", "--format", "json"], "square.json");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["fiber_part"], 1);
    assert_eq!(v["result"]["linear_part"], 4);
    assert_eq!(v["result"]["order"], "product");
}

#[test]
fn oracle_square_kernel() {
    let o = with_data(&["oracle", "--r", "1", "--map", "fiber", "--max-degree", "2", "--reduced-gb"], "square.json");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("T[(1,1);1]*T[(2,2);1] - T[(1,2);1]*T[(2,1);1]\n"), "{text}");
    assert!(text.contains("stable at degree 3: true"));
}

#[test]
fn multi_oracle_finds_four_cubics() {
    let (a, b) = (data("planar_a.json"), data("planar_b.json"));
    let o = ferrers(&["multi-oracle", a.to_str().unwrap(), b.to_str().unwrap(), "--reduced-gb", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["degree_histogram"]["3"], 4);
}

#[test]
fn exchange_holds_for_ferrers_collection() {
    let (a, b) = (data("planar_b.json"), data("staircase.json"));
    let o = ferrers(&["exchange", a.to_str().unwrap(), b.to_str().unwrap(), "--weight-bound", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["holds"], true);
}

#[test]
fn input_errors_exit_2_with_line_numbers() {
    let o = with_data(&["check"], "bad_syntax.json");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line"), "{err}");

    let o = with_data(&["check"], "bad_zero.json");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 2"));

    let o = with_data(&["standardize"], "bad_tableau.txt");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 2"));

    assert_eq!(ferrers(&["check", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(ferrers(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn resource_limits_exit_3() {
    let o = with_data(&["oracle", "--max-degree", "3", "--max-monomials", "100"], "standardizable_3d.json");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = ["fiber-gb", "--r", "2", "--reduce", "--format", "json"];
    let a = with_data(&args, "standardizable_3d.json");
    let b = with_data(&args, "standardizable_3d.json");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn regression_suite_passes() {
    let o = ferrers(&["regressions"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 9);
}
