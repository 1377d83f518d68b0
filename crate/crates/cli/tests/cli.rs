use std::process::{Command, Output};

use serde_json::Value;

fn trigonal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigonal"))
        .args(args)
        .env_remove("TRIGONAL_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = trigonal(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

#[test]
fn example_passes_all_checks() {
    let (code, v) = json(&["example25"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["scheme"], "o1 <1 x2 x1 >1 v");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn parse_errors_exit_two() {
    let (code, v) = json(&["parse", "x1 v"]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("position 0"));
}

#[test]
fn scheme_to_braid_matches_the_worked_word() {
    let (code, v) = json(&["scheme2braid", "o1 <1 x2 x1 >1 v", "--b", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["braid"], "-2 -1 2 -1 -2 -1 -1 -1 1 2 1 1 2 1");
    assert_eq!(v["outputs"]["trivial"], true);
}

#[test]
fn trace_accepts_chebyshev_shortcuts() {
    let (code, v) = json(&["trace", "--cheb", "3", "4@4/5"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["events"]["N"], 1);
    let (code, v) = json(&["trace", "--P", "0,-3,0,4", "--Q", "T4@3/10"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["pass"], true);
}

#[test]
fn degenerate_curve_exits_three() {
    // x = t^3 has a doubled critical point
    let (code, _) = json(&["trace", "--P", "0,0,0,1", "--Q", "0,0,0,0,1"]);
    assert_eq!(code, 3);
}

#[test]
fn random_trace_is_seeded() {
    let a = trigonal(&["trace", "--random", "7", "--seed", "42", "--json"]);
    let b = trigonal(&["trace", "--random", "7", "--seed", "42", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn certify_and_bounds() {
    let (code, v) = json(&["certify", "--torus", "5", "--b", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["verdict"], "infeasible");
    let (_, v) = json(&["certify", "--twist", "2", "2", "--witnesses"]);
    assert_eq!(v["outputs"]["verdict"], "feasible");
    assert_eq!(v["checks"][0]["pass"], true);
    let (code, v) = json(&["bounds", "--d", "6", "--alternating"]);
    assert_eq!((code, v["outputs"]["max_crossings"].as_u64()), (0, Some(5)));
    assert_eq!(json(&["bounds", "--d", "5", "--alternating"]).0, 2);
}

#[test]
fn harmonic_zreduce_frobenius_degree() {
    let (_, v) = json(&["harmonic", "3", "5", "7"]);
    assert_eq!(v["outputs"]["determinant"], 5);
    let (code, v) = json(&["zreduce", "--harmonic", "3", "4", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["degree_certificate"], 5);
    let (code, v) = json(&["frobenius", "3", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["count"], 3);
    assert_eq!(json(&["frobenius", "4", "6"]).0, 2);
    let (_, v) = json(&["degree", "--torus", "5"]);
    assert_eq!(v["outputs"]["main"], serde_json::json!({"a": 3, "b": 7, "c": 8}));
}

#[test]
fn rewrite_and_reduce() {
    let (_, v) = json(&["rewrite", "<2 x1 >2 v", "--rule", "exchange_max", "--position", "1"]);
    assert_eq!(v["outputs"]["scheme"], "<2 x2 >1 v");
    let (code, v) = json(&["reduce", "<1 x2 x1 x1 >2 v"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"][0]["pass"], true);
}

#[test]
fn svg_files_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for p in [&a, &b] {
        let out = trigonal(&["svg", "--harmonic", "3", "4", "5", "--out", p.to_str().unwrap()]);
        assert!(out.status.success());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let c = dir.path().join("c.svg");
    assert!(trigonal(&["svg", "--scheme", "o1 <1 x2 x1 >1 v", "-o", c.to_str().unwrap()]).status.success());
    assert_eq!(std::fs::read_to_string(&c).unwrap().matches(r#"class="tangency""#).count(), 2);
}
