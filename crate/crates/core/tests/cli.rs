//! The `gbf` binary, end to end.

use std::path::PathBuf;
use std::process::Command;

use gbf_core::criteria::Verdict;
use gbf_core::witness::WitnessFile;

fn gbf(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gbf")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gbf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn decide_exit_codes_follow_verdicts() {
    assert_eq!(gbf(&["decide", "4", "5"]).0, 0);
    let (code, out, _) = gbf(&["decide", "9", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("C1-LamLeung"));
    assert_eq!(gbf(&["decide", "14", "1"]).0, 2);
    assert_eq!(gbf(&["decide", "0", "1"]).0, 3);
    assert_eq!(gbf(&["decide", "4"]).0, 3);
    assert_eq!(gbf(&["frobnicate"]).0, 3);
    assert_eq!(gbf(&["--help"]).0, 0);
}

#[test]
fn decide_json_round_trips_and_revalidates() {
    for (m, n) in [("398", "7"), ("1102", "11"), ("637", "3"), ("1990", "3"), ("130", "5")] {
        let (code, out, _) = gbf(&["decide", m, n, "--json"]);
        assert_eq!(code, 1);
        let v: Verdict = serde_json::from_str(&out).unwrap();
        v.report().unwrap().revalidate().unwrap();
    }
    let (_, out, _) = gbf(&["decide", "6", "2", "--json"]);
    assert!(matches!(serde_json::from_str(&out).unwrap(), Verdict::Exists { verified: true, .. }));
}

#[test]
fn construct_then_verify() {
    for (m, n) in [("6", "2"), ("8", "3"), ("2", "4"), ("4", "1")] {
        let path = scratch(&format!("w_{m}_{n}.json"));
        let (code, out, _) = gbf(&["construct", m, n, "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(gbf(&["verify", path.to_str().unwrap()]).0, 0);
    }
    let (code, out, _) = gbf(&["construct", "6", "2"]);
    assert_eq!(code, 0);
    assert_eq!(WitnessFile::parse(&out).unwrap().values(), &[0, 0, 0, 3]);
    let (code, _, err) = gbf(&["construct", "3", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("C1-LamLeung"));
}

#[test]
fn verify_rejects_and_reports() {
    let path = scratch("constant.json");
    std::fs::write(&path, r#"{"m":4,"n":2,"values":[0,0,0,0]}"#).unwrap();
    let (code, out, _) = gbf(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("y = 0"), "{out}");
    assert!(out.contains("|W_f(y)|^2 = 16"), "{out}");

    let path = scratch("truncated.json");
    std::fs::write(&path, r#"{"m":4,"n":2,"values":[0,1"#).unwrap();
    assert_eq!(gbf(&["verify", path.to_str().unwrap()]).0, 3);
    let path = scratch("short.json");
    std::fs::write(&path, r#"{"m":4,"n":2,"values":[0,1]}"#).unwrap();
    assert_eq!(gbf(&["verify", path.to_str().unwrap()]).0, 3);
    assert_eq!(gbf(&["verify", "/nonexistent/witness.json"]).0, 3);
}

#[test]
fn oracle_counts_and_budget() {
    assert!(gbf(&["oracle", "2", "2"]).1.starts_with("8 of 16"));
    assert!(gbf(&["oracle", "3", "1"]).1.starts_with("0 of 9"));
    assert!(gbf(&["oracle", "5", "3"]).1.starts_with("0 of 390625"));
    let (code, _, err) = gbf(&["oracle", "3", "4"]);
    assert_eq!(code, 3);
    assert!(err.contains("43046721"), "{err}");
    assert_eq!(gbf(&["oracle", "5", "3", "--budget", "1000"]).0, 3);
}

#[test]
fn scan_formats() {
    let (code, out, _) = gbf(&["scan", "--m", "2..10", "--n", "1..4"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "m,n,verdict,criterion,detail");
    assert_eq!(lines.len(), 37);
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 5));
    assert_eq!(lines[1].split(',').take(2).collect::<Vec<_>>(), ["2", "1"]);

    let (_, out, _) = gbf(&["scan", "--m", "3..3", "--n", "1..6"]);
    assert!(out.lines().skip(1).all(|l| l.contains(",NotExists,C1-LamLeung,")));

    let (_, md, _) = gbf(&["scan", "--m", "3..4", "--n", "1..2", "--format", "md"]);
    assert!(md.starts_with("| m | n | verdict | criterion | detail |\n|---|---|---|---|---|\n"));
    assert_eq!(md.lines().count(), 6);

    assert_eq!(gbf(&["scan", "--m", "10..2", "--n", "1..4"]).0, 3);
    assert_eq!(gbf(&["scan", "--m", "1..4", "--n", "1..4"]).0, 3);
    assert_eq!(gbf(&["scan", "--m", "2..4", "--n", "0..4"]).0, 3);
    assert_eq!(gbf(&["scan", "--m", "2..4", "--n", "1..4", "--format", "xml"]).0, 3);
}

#[test]
fn scan_is_deterministic() {
    let args = ["scan", "--m", "2..60", "--n", "1..7"];
    assert_eq!(gbf(&args).1, gbf(&args).1);
}

#[test]
fn tables_print() {
    let (code, out, _) = gbf(&["table", "rp"]);
    assert_eq!(code, 0);
    assert!(out.lines().next().unwrap().ends_with("65537"));
    let (_, out, _) = gbf(&["table", "p7"]);
    assert_eq!(out.lines().count(), 4);
    assert_eq!(gbf(&["table", "p9"]).0, 3);
}
