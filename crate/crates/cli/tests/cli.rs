//! End-to-end checks of the `graphinv` binary: output shapes, exit
//! codes, and report determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use graphinv::format::parse_edge_list;
use graphinv::sweep::SweepReport;
use graphinv_core::families;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphinv"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("graphinv-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn compute_reports_invariants() {
    let p4 = temp_file("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    let out = run(&["compute", p4.to_str().unwrap(), "--invariant", "z"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "Z = 1\n");

    let out = run(&["compute", p4.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "dim = 1\nZ = 1\nZ_e = 1\nP = 1\n");
}

#[test]
fn compute_input_errors_exit_2() {
    let out = run(&["compute", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));

    let disconnected = temp_file("disc.txt", "4 2\n0 1\n2 3\n");
    let out = run(&["compute", disconnected.to_str().unwrap(), "--invariant", "z"]);
    assert_eq!(out.status.code(), Some(2));

    let malformed = temp_file("bad.txt", "2 1\n0 0\n");
    let out = run(&["compute", malformed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_emits_edge_lists() {
    let out = run(&["family", "wheel", "6"]);
    assert!(out.status.success());
    let g = parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!(g, families::wheel(6).unwrap().0);

    let out = run(&["family", "wheel", "6", "--line"]);
    let lg = parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!(lg.n(), 12);

    let out = run(&["family", "bouquet", "2", "3", "4"]);
    let b = parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!(b, families::bouquet(&[2, 3, 4]).unwrap().0);

    let out = run(&["family", "cycle", "5", "--dot"]);
    assert!(stdout(&out).starts_with("graph cycle {"));

    assert_eq!(run(&["family", "moebius", "4"]).status.code(), Some(2));
    assert_eq!(run(&["family", "wheel", "2"]).status.code(), Some(2));
}

#[test]
fn sweep_reports_are_deterministic() {
    let args = ["sweep", "z-vs-2zl", "--max-n", "4", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let report = SweepReport::from_json(&stdout(&a)).unwrap();
    assert!(report.summary.violations.is_empty());
    // n = 1 has no edges and is skipped by line-graph sweeps
    assert_eq!(report.summary.checked, 1 + 4 + 38);

    let single = bin()
        .args(args)
        .env("GRAPHINV_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(single.stdout, a.stdout);

    let csv = run(&["sweep", "z-vs-2zl", "--max-n", "3", "--format", "csv"]);
    assert!(stdout(&csv).starts_with("id,n,m,lhs,"));
}

#[test]
fn sweep_unknown_conjecture_exits_2() {
    assert_eq!(run(&["sweep", "no-such-conjecture"]).status.code(), Some(2));
}

#[test]
fn table_runs_clean() {
    let out = run(&["table", "--format", "md"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("| graph |"));
    assert!(text.contains("violations: 0"));

    let json = run(&["table", "--format", "json"]);
    let report = SweepReport::from_json(&stdout(&json)).unwrap();
    assert!(report.summary.violations.is_empty());
    assert!(report
        .records
        .iter()
        .any(|r| r.note.contains("external formula")));
}

#[test]
fn verify_witnesses_runs_clean() {
    let out = run(&["verify-witnesses"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("violations: 0"));

    let out = run(&["verify-witnesses", "--family", "wheel-line"]);
    assert!(out.status.success());

    assert_eq!(
        run(&["verify-witnesses", "--family", "nope"]).status.code(),
        Some(2)
    );
}
