//! End-to-end checks of the command surface: exit codes, format handling,
//! and the documented example invocations.

use std::path::PathBuf;
use std::process::{Command, Output};

fn planext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planext"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("planext-test-{}-{name}", std::process::id()));
    p
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn construct_icosidodecahedron_summary() {
    let path = tmp("ico.json");
    let out = planext(&[
        "construct",
        "icosidodecahedron",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("n=30 e=60"), "got: {stdout}");
    assert!(stdout.contains("f3=20"));
    assert!(stdout.contains("f5=12"));
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("\"n\": 30"));
    std::fs::remove_file(path).ok();
}

#[test]
fn construct_c5_family_summary() {
    let path = tmp("gstar.json");
    let out = planext(&[
        "construct",
        "c5-family",
        "--k",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("n=99 e=231"), "got: {stdout}");
    std::fs::remove_file(path).ok();
}

#[test]
fn construct_inadmissible_triangulation_lists_options() {
    let out = planext(&["construct", "triangulation-t", "--k", "7"]);
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("6"), "lists admissible orders: {stderr}");
    assert!(stderr.contains("15"));
    assert!(stderr.contains("27"));
}

#[test]
fn check_figure5_free_and_not_free() {
    let path = tmp("fig5.json");
    let out = planext(&["construct", "figure5", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    let ok = planext(&[
        "check",
        "--input",
        path.to_str().unwrap(),
        "--free",
        "c5",
        "--embedding",
    ]);
    assert_eq!(code(&ok), 0);

    let hit = planext(&["check", "--input", path.to_str().unwrap(), "--free", "c4"]);
    assert_eq!(code(&hit), 1, "a 4-cycle exists in the K4 blocks");
    let stdout = String::from_utf8_lossy(&hit.stdout);
    assert!(stdout.contains("witness"), "got: {stdout}");
    std::fs::remove_file(path).ok();
}

#[test]
fn malformed_json_is_usage_error() {
    let path = tmp("broken.json");
    std::fs::write(&path, "{\"n\": 3, \"rotation\": [[1], [0]").unwrap();
    let out = planext(&["check", "--input", path.to_str().unwrap(), "--free", "c4"]);
    assert_eq!(code(&out), 2);
    std::fs::remove_file(path).ok();
}

#[test]
fn audit_icosidodecahedron_all_hold() {
    let path = tmp("ico-audit.json");
    planext(&[
        "construct",
        "icosidodecahedron",
        "--out",
        path.to_str().unwrap(),
    ]);
    let out = planext(&["audit", "--input", path.to_str().unwrap(), "--forbid", "c4"]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("tight"), "equality rows flagged: {stdout}");
    assert!(!stdout.contains("VIOLATED"));
    std::fs::remove_file(path).ok();
}

#[test]
fn audit_rejects_graph_containing_pattern() {
    // an embedded K4 contains a 4-cycle, so the C4 audit is inapplicable
    let path = tmp("k4.json");
    std::fs::write(
        &path,
        r#"{"n": 4, "rotation": [[1,3,2],[2,3,0],[0,3,1],[0,1,2]]}"#,
    )
    .unwrap();
    let out = planext(&["audit", "--input", path.to_str().unwrap(), "--forbid", "c4"]);
    assert_eq!(code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("c4"), "names the pattern: {stderr}");
    std::fs::remove_file(path).ok();
}

#[test]
fn audit_gstar_c5_all_hold() {
    let path = tmp("gstar-audit.json");
    planext(&[
        "construct",
        "c5-family",
        "--k",
        "6",
        "--out",
        path.to_str().unwrap(),
    ]);
    let out = planext(&[
        "audit",
        "--input",
        path.to_str().unwrap(),
        "--forbid",
        "c5",
        "--json",
    ]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"all_applicable_hold\":true"));
    std::fs::remove_file(path).ok();
}

#[test]
fn reduce_diamond_to_c4() {
    let path = tmp("diamond.json");
    std::fs::write(
        &path,
        r#"{"n": 4, "rotation": [[1,2,3],[2,0,3],[0,1],[1,0]]}"#,
    )
    .unwrap();
    let out_path = tmp("diamond-reduced.json");
    let out = planext(&[
        "reduce",
        "--input",
        path.to_str().unwrap(),
        "--mode",
        "prime",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(
        stdout.contains("after: n=4 e=4"),
        "diamond becomes a 4-cycle: {stdout}"
    );
    std::fs::remove_file(path).ok();
    std::fs::remove_file(out_path).ok();
}

#[test]
fn reduce_triangle_free_unchanged() {
    let path = tmp("c6.json");
    std::fs::write(
        &path,
        r#"{"n": 6, "rotation": [[1,5],[2,0],[3,1],[4,2],[5,3],[0,4]]}"#,
    )
    .unwrap();
    let out = planext(&[
        "reduce",
        "--input",
        path.to_str().unwrap(),
        "--mode",
        "prime",
    ]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("before: n=6 e=6"));
    assert!(stdout.contains("after: n=6 e=6"));
    std::fs::remove_file(path).ok();
}

#[test]
fn search_exit_codes_and_budget() {
    let out = planext(&["search", "--n", "3", "--forbid", "c4"]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("ex=3"), "got: {stdout}");

    // an absurdly small budget forces exit 3 with partial output
    let out = planext(&[
        "search", "--n", "11", "--forbid", "k4", "--budget", "0.0001", "--json",
    ]);
    assert_eq!(code(&out), 3);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("\"complete\":false"), "got: {stdout}");
}

#[test]
fn bounds_output() {
    let out = planext(&["bounds", "--n", "30", "--forbid", "c4"]);
    assert_eq!(code(&out), 0);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("60"), "got: {stdout}");

    let out = planext(&["bounds", "--n", "11", "--forbid", "c5"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("99/5"), "got: {stdout}");
    assert!(stdout.contains("floor 19"));

    let out = planext(&["bounds", "--n", "10", "--forbid", "c5"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("96/5"), "got: {stdout}");
    assert!(stdout.contains("floor 19"));
    assert!(stdout.contains("n = 11"));

    let out = planext(&["bounds", "--n", "3", "--forbid", "c4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn graph6_input_and_custom_pattern() {
    let g6 = tmp("k4.g6");
    std::fs::write(&g6, "C~").unwrap();
    let out = planext(&["check", "--input", g6.to_str().unwrap(), "--free", "c4"]);
    assert_eq!(code(&out), 1, "K4 contains a 4-cycle");

    // diamond as a custom pattern: K4 contains it
    let pat = tmp("diamond.g6");
    std::fs::write(&pat, "C^").unwrap();
    let spec = format!("custom:{}", pat.to_str().unwrap());
    let out = planext(&["check", "--input", g6.to_str().unwrap(), "--free", &spec]);
    assert_eq!(code(&out), 1);
    std::fs::remove_file(g6).ok();
    std::fs::remove_file(pat).ok();
}

#[test]
fn dot_input_rejected_dot_output_allowed() {
    let path = tmp("x.dot");
    std::fs::write(&path, "graph g { 0 -- 1; }").unwrap();
    let out = planext(&["check", "--input", path.to_str().unwrap(), "--free", "c4"]);
    assert_eq!(code(&out), 2);
    std::fs::remove_file(path).ok();

    let out_path = tmp("ico.dot");
    let out = planext(&[
        "construct",
        "icosidodecahedron",
        "--format",
        "dot",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let dot = std::fs::read_to_string(&out_path).unwrap();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("--").count(), 60);
    std::fs::remove_file(out_path).ok();
}

#[test]
fn workers_env_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_planext"))
        .env("PLANEXT_WORKERS", "3")
        .args(["search", "--n", "5", "--forbid", "c4", "--json", "--deterministic"])
        .output()
        .expect("binary runs");
    assert_eq!(code(&out), 0);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("workers=3"), "env var sets the default: {stderr}");
}

#[test]
fn config_file_sets_defaults() {
    let cfg = tmp("cfg");
    std::fs::write(&cfg, "workers=2\nbudget=600\n").unwrap();
    let out = planext(&[
        "search",
        "--n",
        "4",
        "--forbid",
        "c4",
        "--config",
        cfg.to_str().unwrap(),
        "--json",
        "--deterministic",
    ]);
    assert_eq!(code(&out), 0);

    let bad = tmp("cfg-bad");
    std::fs::write(&bad, "n=9\n").unwrap();
    let out = planext(&[
        "search",
        "--n",
        "4",
        "--forbid",
        "c4",
        "--config",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2, "config may only set workers/budget");
    std::fs::remove_file(cfg).ok();
    std::fs::remove_file(bad).ok();
}
