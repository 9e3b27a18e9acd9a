use std::path::PathBuf;
use std::process::{Command, Output};

use nsring_core::{is_pseudo_symmetric, teter_oracle, NumericalSemigroup, ReportDocument};
use serde_json::Value;

fn nsring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsring"))
        .args(args)
        .output()
        .expect("run nsring")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_golden_json() {
    for (gens, file) in [
        ("11,12,14,15", "analyze_11_12_14_15.json"),
        ("4,7,9,10", "analyze_4_7_9_10.json"),
        ("3,4,5", "analyze_3_4_5.json"),
    ] {
        let out = nsring(&["analyze", gens, "--json"]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), golden(file), "{gens}");
    }
}

#[test]
fn analyze_golden_table() {
    let out = nsring(&["analyze", "11,12,14,15"]);
    assert_eq!(stdout(&out), golden("analyze_11_12_14_15.txt"));
}

#[test]
fn analyze_accepts_spaces_and_reports_input() {
    let out = nsring(&["analyze", "5 3", "4", "7", "--json"]);
    let doc: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc.input, vec![5, 3, 4, 7]);
    assert_eq!(doc.report.generators, vec![3, 4, 5]);
    assert_eq!(doc.timing_us, None);

    let out = nsring(&["analyze", "3,4,5", "--json", "--timing"]);
    let doc: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc.timing_us.is_some());
}

#[test]
fn analyze_examples() {
    let v: Value = serde_json::from_slice(&nsring(&["analyze", "1", "--json"]).stdout).unwrap();
    assert_eq!(v["gorenstein"], true);
    assert_eq!(v["teter"], false);

    let v: Value = serde_json::from_slice(&nsring(&["analyze", "3,4,5", "--json"]).stdout).unwrap();
    assert_eq!(v["teter"], true);
    assert_eq!(v["certificate"]["gamma"], 5);
    assert_eq!(v["certificate"]["delta"], 0);
}

#[test]
fn bad_input_exit_codes() {
    for args in [
        &["analyze", "4,6"][..],
        &["analyze", "3,x"],
        &["analyze", "0,1"],
        &["family", "pseudosym", "1", "1", "1"],
        &["family", "arith", "4", "1", "2", "2"],
        &["family", "arith", "4", "1"],
        &["verify", "--genus", "3", "--suite", "nope"],
    ] {
        let out = nsring(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn resource_limit_exit_code() {
    assert_eq!(
        nsring(&["enumerate", "--genus", "31"]).status.code(),
        Some(3)
    );
    assert_eq!(nsring(&["verify", "--genus", "31"]).status.code(), Some(3));
}

#[test]
fn enumerate_genus_zero() {
    let out = nsring(&["enumerate", "--genus", "0", "--ndjson"]);
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 1);
    let doc: ReportDocument = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(doc.report.generators, vec![1]);
}

#[test]
fn enumerate_teter_records_recheck() {
    let out = nsring(&["enumerate", "--genus", "6", "--filter", "teter", "--ndjson"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.ends_with('\n'));
    let mut keys = Vec::new();
    for line in text.lines() {
        let doc: ReportDocument = serde_json::from_str(line).unwrap();
        let h = NumericalSemigroup::from_generators(&doc.report.generators).unwrap();
        let cert = teter_oracle(&h).unwrap().expect("listed as Teter");
        assert_eq!(Some(cert), doc.report.certificate);
        keys.push((doc.report.genus, doc.report.generators));
    }
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(keys.len(), 1 + 2 + 4 + 7 + 15);
}

#[test]
fn enumerate_pseudo_symmetric_count() {
    let out = nsring(&[
        "enumerate",
        "--genus",
        "12",
        "--filter",
        "pseudo-symmetric",
        "--ndjson",
    ]);
    let listed = stdout(&out).lines().count();
    let counted = nsring_core::enumerate_by_genus(12)
        .unwrap()
        .filter(is_pseudo_symmetric)
        .count();
    assert_eq!(listed, counted);
    assert!(listed > 0);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_nsring"))
            .args(["enumerate", "--genus", "9", "--ndjson"])
            .env("NSRING_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));

    let verify = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_nsring"))
            .args(["verify", "--genus", "9", "--json"])
            .env("NSRING_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(verify("1"), verify("3"));
}

#[test]
fn verify_exit_codes() {
    let out = nsring(&["verify", "--genus", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let out = nsring(&["verify", "--genus", "10", "--paranoid", "--suite", "teter"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("gamma-lower-bound"));
    assert!(stdout(&out).contains("PASS: 0 violations"));
}

#[test]
fn family_commands() {
    for (args, teter) in [
        (&["family", "pseudosym", "1", "2", "3"][..], true),
        (&["family", "pseudosym", "2", "3", "4"], false),
        (&["family", "arith", "7", "1", "1", "3"], true),
    ] {
        let out = nsring(args);
        assert!(out.status.success(), "{args:?}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["agree"], true);
        assert_eq!(v["actual"]["teter"], teter);
    }
    let v: Value =
        serde_json::from_slice(&nsring(&["family", "arith", "7", "1", "1", "3"]).stdout).unwrap();
    assert_eq!(v["actual"]["type"], 3);
}
