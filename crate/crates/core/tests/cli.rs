use std::process::{Command, Output};

use graphcurve::BettiTable;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graphcurve"))
        .args(args)
        .env_remove("GRAPHCURVE_PRIME")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table1_layout() {
    let o = run(&["table", "--family", "tree-of-cycles", "--cycles", "3,4,6", "--bridges", "3,2", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("- | 0  1"));
    assert!(lines[2].contains("9078"));
    assert!(lines[4].split_whitespace().any(|t| t == "8378"));
    assert!(lines[5].trim_end().ends_with(" 3"));
}

#[test]
fn validate_k4_cites_condition_five() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.json");
    std::fs::write(&path, r#"{"vertices": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#).unwrap();
    let o = run(&["validate", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("condition (5)"));
}

#[test]
fn compare_cycle_matches() {
    let o = run(&["compare", "--family", "cycle", "--n", "6", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().last().unwrap() == "match");
}

#[test]
fn output_is_deterministic() {
    let args = ["oracle", "--family", "glued-chain", "--cycle-len", "4", "--k", "2", "--seed", "3", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let scan = ["scan", "--d-max", "6", "--format", "json"];
    assert_eq!(run(&scan).stdout, run(&scan).stdout);
}

#[test]
fn json_output_round_trips() {
    let o = run(&["table", "--family", "extension", "--base", "cycle", "--n", "5", "--attach", "0:2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let t = BettiTable::from_json(&stdout(&o)).unwrap();
    assert_eq!(t, graphcurve::formula::genus1_table(4, 2).unwrap());
    let o = run(&["table", "--family", "path", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "row,col,value\n0,0,1\n1,1,6\n1,2,8\n1,3,3\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["table"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--family", "cycle"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--file", "/nonexistent/graph.json"]).status.code(), Some(2));
    let o = run(&["table", "--family", "glued-chain", "--cycle-len", "4", "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["oracle", "--family", "tree-of-cycles", "--cycles", "3,4,6", "--bridges", "3,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--slow"));
}

#[test]
fn prime_from_environment_and_flag() {
    let base = ["export-arrangement", "--family", "path", "--n", "3"];
    let env = Command::new(env!("CARGO_BIN_EXE_graphcurve")).args(base).env("GRAPHCURVE_PRIME", "65537").output().unwrap();
    assert!(stdout(&env).contains("\"p\": 65537"));
    let flag = Command::new(env!("CARGO_BIN_EXE_graphcurve"))
        .args(base)
        .args(["--prime", "32003"])
        .env("GRAPHCURVE_PRIME", "65537")
        .output()
        .unwrap();
    assert!(stdout(&flag).contains("\"p\": 32003"));
}

#[test]
fn strict_scan_flags_counterexamples() {
    let o = run(&["scan", "--d-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("COUNTEREXAMPLE"));
    assert_eq!(run(&["scan", "--d-max", "6", "--strict"]).status.code(), Some(1));
    assert_eq!(run(&["scan", "--d-max", "5", "--strict"]).status.code(), Some(0));
}

#[test]
fn gen_and_stats() {
    let o = run(&["gen", "--enumerate", "4", "--format", "json"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 1 + 2 + 4);
    let o = run(&["stats", "--family", "glued-chain", "--cycle-len", "4", "--k", "4"]);
    assert_eq!(stdout(&o).lines().take(4).collect::<Vec<_>>(), ["d = 10", "m = 13", "g = 4", "n = 6"]);
}
