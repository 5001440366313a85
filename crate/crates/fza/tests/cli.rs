//! End-to-end tests of the `fza` binary: exit codes, output formats, and
//! the compare/eval/validate subcommands.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}.fza", env!("CARGO_MANIFEST_DIR"))
}

fn fza(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fza"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn determinize_wri_prints_three_states() {
    let out = fza(&["determinize", "--method", "wri", &fixture("e1")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("states: 3"));
}

#[test]
fn determinize_budget_exit_code() {
    let out = fza(&[
        "determinize",
        "--method",
        "nerode",
        "--max-states",
        "100",
        &fixture("e6"),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn determinize_json_uses_exact_strings() {
    let out = fza(&["determinize", "--method", "ri", "--format", "json", &fixture("e6")]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["output_states"], 3);
    let terms: Vec<String> = v["cdfa"]["states"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["term"].as_str().unwrap().to_string())
        .collect();
    assert!(terms.contains(&"1/2".to_string()));
}

#[test]
fn determinize_dot_output() {
    let out = fza(&["determinize", "--method", "nerode", "--format", "dot", &fixture("e1")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph cdfa {"));
    assert_eq!(text.matches("shape=circle").count(), 7);
}

#[test]
fn determinize_out_file() {
    let dir = std::env::temp_dir().join("fza-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path: PathBuf = dir.join("e1.dot");
    let out = fza(&[
        "determinize",
        "--method",
        "nerode",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
        &fixture("e1"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path).unwrap().contains("digraph"));
}

#[test]
fn quasiorder_ri_reports_distinct_rows() {
    let out = fza(&["quasiorder", "--kind", "ri", &fixture("e5")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("distinct rows: 4"));
    assert_eq!(text.lines().filter(|l| l.split_whitespace().count() == 5).count(), 5);
}

#[test]
fn eval_words() {
    let out = fza(&["eval", "--word", "x", &fixture("e6")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1/2");

    let out = fza(&["eval", "--word", "", &fixture("e1")]);
    assert_eq!(stdout(&out).trim(), "0");

    let out = fza(&["eval", "--word", "x,y,x", &fixture("e1")]);
    assert_eq!(out.status.code(), Some(0));

    let out = fza(&["eval", "--word", "z", &fixture("e1")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compare_reports_all_methods() {
    let out = fza(&["compare", "--maxlen", "3", &fixture("e3")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("nerode: states 6"));
    assert!(text.contains("ri: states 4"));
    assert!(text.contains("children-nerode: states 5"));
    assert!(text.lines().all(|l| l.contains("equivalent ≤ 3")));
}

#[test]
fn compare_notes_budget_exceeded_methods() {
    let out = fza(&[
        "compare",
        "--methods",
        "nerode,ri",
        "--max-states",
        "50",
        &fixture("e6"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("nerode: budget exceeded"));
    assert!(text.contains("ri: states 3"));
}

#[test]
fn validate_and_errors() {
    let out = fza(&["validate", &fixture("e2")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("ok: 3 states"));

    let dir = std::env::temp_dir().join("fza-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.fza");
    std::fs::write(&bad, "lattice boolean\nstates 2\nalphabet x\ninitial 1 0.5\n").unwrap();
    let out = fza(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    let out = fza(&["determinize"]);
    assert_eq!(out.status.code(), Some(1));
    let out = fza(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
    let out = fza(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unknown_method_exits_two() {
    let out = fza(&["determinize", "--method", "bogus", &fixture("e1")]);
    assert_eq!(out.status.code(), Some(2));
}
