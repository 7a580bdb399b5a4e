//! End-to-end checks of the binary: exit codes, byte determinism,
//! round-trips through both graph formats, and error surfaces.

use std::fs;
use std::process::{Command, Output};

fn estrada(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_estrada"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn reports_are_byte_deterministic() {
    let first = estrada(&["cycle-table", "--nmax", "10"]);
    let second = estrada(&["cycle-table", "--nmax", "10"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let v1 = estrada(&["verify", "odd-unicyclic", "--n-min", "3", "--n-max", "5"]);
    let v2 = estrada(&["verify", "odd-unicyclic", "--n-min", "3", "--n-max", "5"]);
    assert_eq!(v1.status.code(), Some(0));
    assert_eq!(v1.stdout, v2.stdout);

    let r1 = estrada(&["verify", "positive-dominance", "--seed", "7"]);
    let r2 = estrada(&["verify", "positive-dominance", "--seed", "7"]);
    assert_eq!(r1.stdout, r2.stdout);
}

#[test]
fn verify_exit_codes_track_verdicts() {
    let confirmed = estrada(&["verify", "moment-reversal"]);
    assert_eq!(confirmed.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&confirmed)).unwrap();
    assert_eq!(report["verdict"], "confirmed");
    assert!(report["counterexample"].is_null());

    // An absurd tie tolerance makes strictness unattainable, forcing a
    // refutation with an embedded counterexample.
    let refuted = estrada(&["verify", "positive-dominance", "--tie-tol", "1000000"]);
    assert_eq!(refuted.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&refuted)).unwrap();
    assert_eq!(report["verdict"], "refuted");
    assert!(report["counterexample"]["graph"]["n"].is_u64());

    let unknown = estrada(&["verify", "does-not-exist"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr_of(&unknown).contains("unknown verification id"));
}

#[test]
fn usage_and_io_errors_exit_two() {
    let missing = estrada(&["analyze", "/no/such/file.txt"]);
    assert_eq!(missing.status.code(), Some(2));

    let badcmd = estrada(&["frobnicate"]);
    assert_eq!(badcmd.status.code(), Some(2));

    let half_range = estrada(&["verify", "tree-order", "--n-min", "4"]);
    assert_eq!(half_range.status.code(), Some(2));
    assert!(stderr_of(&half_range).contains("--n-min and --n-max"));

    let bad_guard = estrada(&["verify", "tree-order", "--guard-override", "max-q=3"]);
    assert_eq!(bad_guard.status.code(), Some(2));
    assert!(stderr_of(&bad_guard).contains("unknown guard"));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "n 3\n0 1 +\n0 9 -\n").unwrap();
    let output = estrada(&["analyze", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let err = stderr_of(&output);
    assert!(err.contains("line 3"), "stderr: {err}");
}

#[test]
fn graph_formats_round_trip() {
    let dir = tempfile::tempdir().unwrap();

    let text_path = dir.path().join("g.txt");
    let text = stdout_of(&estrada(&["family", "kind=pendant-cycle", "n=6", "l=4", "sign=-1"]));
    fs::write(&text_path, &text).unwrap();

    let json_path = dir.path().join("g.json");
    let json = stdout_of(&estrada(&[
        "family",
        "kind=pendant-cycle",
        "n=6",
        "l=4",
        "sign=-1",
        "--format",
        "json",
    ]));
    fs::write(&json_path, &json).unwrap();

    let from_text = estrada(&["analyze", text_path.to_str().unwrap()]);
    let from_json = estrada(&["analyze", json_path.to_str().unwrap()]);
    assert_eq!(from_text.status.code(), Some(0));
    assert_eq!(from_text.stdout, from_json.stdout);

    let report: serde_json::Value = serde_json::from_str(&stdout_of(&from_text)).unwrap();
    let exported: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(report["graph"], exported);
}

#[test]
fn family_emits_exact_edge_list() {
    let output = estrada(&["family", "kind=cycle", "n=4", "sign=-1"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(
        stdout_of(&output),
        "# family kind=cycle n=4 sign=-1\nn 4\n0 1 +\n0 3 -\n1 2 +\n2 3 +\n"
    );

    let csv = estrada(&["family", "kind=cycle", "n=4", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(2));
}

#[test]
fn out_flag_redirects_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let direct = estrada(&["cycle-table", "--nmax", "6", "--format", "csv"]);
    let redirected = estrada(&[
        "cycle-table",
        "--nmax",
        "6",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(redirected.status.code(), Some(0));
    assert!(redirected.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn guard_override_is_honored() {
    let over = estrada(&[
        "verify",
        "tree-order",
        "--n-min",
        "9",
        "--n-max",
        "9",
        "--guard-override",
        "max-n=8",
    ]);
    assert_eq!(over.status.code(), Some(2));
    assert!(stderr_of(&over).contains("guard"));
}
