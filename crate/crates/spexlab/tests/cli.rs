//! End-to-end CLI checks: argument handling, stdin graph input, output
//! formats, and exit codes.

use std::io::Write;
use std::process::{Command, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_spexlab");

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run_with_stdin(args: &[&str], input: &str) -> (i32, String) {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn construct_emits_graph6() {
    let (code, stdout, _) = run(&["construct", "--family", "S+", "--n", "9", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 1);
    let g = spexlab::graph6::decode(stdout.trim()).unwrap();
    assert_eq!(g.n(), 9);
    assert_eq!(g.edge_count(), 2 * 7 + 1 + 1);
}

#[test]
fn spectrum_reads_stdin() {
    // K4: lambda = 3
    let (code, stdout) = run_with_stdin(&["spectrum"], "C~\n");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(stdout.trim()).unwrap();
    assert_eq!(v["schema"], 1);
    assert!((v["lambda"].as_f64().unwrap() - 3.0).abs() < 1e-9);
}

#[test]
fn check_free_verdicts() {
    // C4 itself is not C4-free; K3 is
    let c4 = spexlab::graph6::encode(&spexlab::graph::Graph::from_edges(
        4,
        &[(0, 1), (1, 2), (2, 3), (3, 0)],
    ));
    let (code, stdout) = run_with_stdin(&["check-free", "--spec", "2"], &format!("{c4}\nBw\n"));
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> = stdout
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["free"], false);
    assert!(lines[0]["witness"]["cycles"].is_array());
    assert_eq!(lines[1]["free"], true);
}

#[test]
fn enum_counts() {
    let (code, stdout, _) = run(&["enum", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 34);
    let (code, stdout, _) = run(&["enum", "--n", "5", "--connected"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 21);
}

#[test]
fn ex_search_json() {
    let (code, stdout, _) = run(&["ex-search", "--spec", "2", "--n", "6"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["optimum_edges"], 7);
    assert_eq!(v["schema"], 1);
}

#[test]
fn spex_search_stream_input() {
    // candidate stream through stdin at n=5
    let (code, stdout, _) = run(&["enum", "--n", "5"]);
    assert_eq!(code, 0);
    let (code, report) = run_with_stdin(
        &["spex-search", "--spec", "2", "--n", "5", "--input", "-"],
        &stdout,
    );
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    // leader is the bowtie, lambda (1+sqrt(17))/2
    let want = (1.0 + 17f64.sqrt()) / 2.0;
    assert!((v["optimum_lambda"].as_f64().unwrap() - want).abs() < 1e-8);
    assert_eq!(v["matches_prediction"], true);
}

#[test]
fn bounds_csv_shape() {
    let (code, stdout, _) = run(&["bounds", "--spec", "2,2", "--n-min", "5", "--n-max", "7"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "n,spec,aks_bound,degree_square_bound,lambda_upper");
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("5,\"2,2\","));
}

#[test]
fn verify_pass_exit_zero() {
    let (code, stdout, _) = run(&["verify", "--claim", "theorem-3.6", "--spec", "2", "--nmax", "6"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, stderr) = run(&["ex-search", "--spec", "1", "--n", "5"]);
    assert_eq!(code, 2, "bad spec string");
    assert!(!stderr.is_empty());
    let (code, _, _) = run(&["nonsense"]);
    assert_eq!(code, 2, "unknown subcommand");
    let (code, _, _) = run(&["verify", "--claim", "lemma-9.9", "--spec", "2"]);
    assert_eq!(code, 2, "unknown claim");
    let (code, _, _) = run(&["spectrum", "--input", "/nonexistent/file"]);
    assert_eq!(code, 2, "unreadable input");
}

#[test]
fn timing_flag_adds_runtime() {
    let (code, stdout, _) = run(&[
        "verify", "--claim", "lemma-3.3", "--spec", "3", "--timing",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["runtime_ms"].is_number());
    // without the flag the field is absent
    let (_, stdout, _) = run(&["verify", "--claim", "lemma-3.3", "--spec", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v.get("runtime_ms").is_none());
}

#[test]
fn workers_flag_accepted() {
    let (code, stdout, _) = run(&["--workers", "2", "enum", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 11);
}
