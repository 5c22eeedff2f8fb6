//! End-to-end tests of the command-line interface: outputs, exit codes, JSON
//! round trips, and cache behavior.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_glnwedge2"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn dim_prints_gram_rank() {
    let out = run(&["dim", "--lambda", "2,1,0", "--mu", "1,1,1", "--p", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");
    let out = run(&["dim", "--lambda", "2,1,0", "--mu", "1,1,1", "--p", "5"]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = run(&["dim", "--lambda", "1,0", "--mu", "1,0", "--p", "5"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn dim_rejects_malformed_tuple() {
    let out = run(&["dim", "--lambda", "2,x,0", "--mu", "1,1,1", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["dim", "--lambda", "2,1,0", "--mu", "1,1,1", "--p", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dim_budget_exhaustion_is_exit_3() {
    let out = run(&[
        "--budget", "1", "dim", "--lambda", "3,1,0", "--mu", "2,1,1", "--p", "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn char_counts_the_restricted_adjoint() {
    let out = run(&["char", "--lambda", "2,1,0", "--p", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("dim 7"));
    let out = run(&["--json", "char", "--lambda", "2,1,0", "--p", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 7);
}

#[test]
fn mult_reports_the_wedge_example() {
    let out = run(&["mult", "--lambda", "1,1,0,0,0", "--i", "1", "--p", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("multiplicity"));
    assert!(text.contains("= 1"));
}

#[test]
fn mult_json_round_trips() {
    let out = run(&[
        "--json",
        "mult",
        "--lambda",
        "2,2,1,0,0",
        "--i",
        "1",
        "--p",
        "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let report: glnwedge2::MultiplicityReport = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(text.trim(), again.trim());
}

#[test]
fn mult_inapplicable_still_exits_zero() {
    // s - lam_s = 1 = 4 mod 3 fails a hypothesis
    let out = run(&["mult", "--lambda", "2,1,0,0", "--i", "1", "--p", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("inapplicable"));
}

#[test]
fn mult_rejects_zero_weight() {
    let out = run(&["mult", "--lambda", "0,0,0,0", "--i", "1", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_sweep_passes() {
    let tmp = tempfile::tempdir().unwrap();
    let report_path = tmp.path().join("report.json");
    let out = run(&[
        "verify",
        "--n-max",
        "4",
        "--deg-max",
        "3",
        "--primes",
        "3,5",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("overall: PASS"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert!(!report["rank_theorem"]["instances"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn linkage_command_on_twisted_pair() {
    let out = run(&[
        "linkage",
        "--lambda",
        "2,0,0,0,0",
        "--mu",
        "3,0,0,0,-1",
        "--p",
        "7",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("linked: true"));
}

#[test]
fn removable_command_lists_pairs() {
    let out = run(&["--json", "removable", "--lambda", "2,1,0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["removable_indices"], serde_json::json!([1, 2, 3]));
    assert_eq!(
        v["removable_pairs"],
        serde_json::json!([[1, 2], [1, 3], [2, 3]])
    );
}

#[test]
fn oracle_mult_smoke() {
    let out = run(&[
        "oracle-mult",
        "--lambda",
        "2,1,0,0",
        "--mu",
        "1,0,0,0",
        "--p",
        "5",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn cache_does_not_change_results() {
    let tmp = tempfile::tempdir().unwrap();
    let cache_dir = tmp.path().join("cache");
    let args = ["--json", "char", "--lambda", "2,1,0,0", "--p", "3"];

    let cold = bin()
        .args(args)
        .env("GLNWEDGE2_CACHE_DIR", &cache_dir)
        .output()
        .unwrap();
    assert!(cold.status.success());
    assert!(cache_dir.join("3_2_1_0_0.json").exists());

    let warm = bin()
        .args(args)
        .env("GLNWEDGE2_CACHE_DIR", &cache_dir)
        .output()
        .unwrap();
    let no_cache = bin()
        .args(args)
        .env("GLNWEDGE2_CACHE_DIR", &cache_dir)
        .arg("--no-cache")
        .output()
        .unwrap();
    assert_eq!(stdout(&cold), stdout(&warm));
    assert_eq!(stdout(&cold), stdout(&no_cache));
}

#[test]
fn corrupt_cache_entry_is_recomputed() {
    let tmp = tempfile::tempdir().unwrap();
    let cache_dir = tmp.path().join("cache");
    std::fs::create_dir_all(&cache_dir).unwrap();
    std::fs::write(cache_dir.join("3_1_1_0.json"), "{ garbage").unwrap();
    let out = bin()
        .args(["--json", "char", "--lambda", "1,1,0", "--p", "3"])
        .env("GLNWEDGE2_CACHE_DIR", &cache_dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}
