//! End-to-end tests of the `zdg` binary: exit-code contract, output shape,
//! and byte determinism across separate process runs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn zdg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zdg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("zdg-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn build_prints_expected_vs_classified() {
    let out = zdg(&["build", "ex34", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("expected K_3 / classified K_3"), "{text}");
}

#[test]
fn build_unknown_id_exits_2() {
    let out = zdg(&["build", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_parameter_exits_2() {
    let out = zdg(&["build", "ex34"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph_dot_has_seven_vertices_for_z16() {
    let file = tmp("z16.json");
    let out = zdg(&["build", "zn", "--n", "16", "-o", file.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = zdg(&["graph", file.to_str().unwrap(), "--dot"]);
    assert!(dot.status.success());
    let text = stdout(&dot);
    assert_eq!(text.matches("[label=").count(), 7);
    assert!(text.contains("graph \"Z16\""));
    // Byte determinism across two separate process invocations.
    let again = zdg(&["graph", file.to_str().unwrap(), "--dot"]);
    assert_eq!(dot.stdout, again.stdout);
    std::fs::remove_file(&file).ok();
}

#[test]
fn classify_round_trips_with_build() {
    let cases: Vec<(&[&str], &str)> = vec![
        (&["build", "ex62", "--n", "3", "--m", "2"], "K̄^{2}_{3,2}"),
        (&["build", "ex34", "--n", "4"], "K_4"),
        (
            &["build", "ex73", "--r1", "2", "--r2", "1", "--r3", "1"],
            "K_{1,1}^{Δ(2,1,1)}",
        ),
        (&["build", "thm42", "--n", "5", "--k", "3"], "K_{1,1,3}"),
    ];
    for (i, (args, want)) in cases.into_iter().enumerate() {
        let file = tmp(&format!("roundtrip-{i}.json"));
        let mut full: Vec<&str> = args.to_vec();
        full.push("-o");
        full.push(file.to_str().unwrap());
        let built = zdg(&full);
        assert!(built.status.success());
        let classified = stdout(&zdg(&["classify", file.to_str().unwrap()]));
        let first_line = classified.lines().next().unwrap();
        // The in-process classification printed by build must agree with
        // classification of the emitted file.
        let build_text = stdout(&built);
        assert!(
            build_text.contains(&format!("classified {first_line}")),
            "build said {build_text:?}, classify said {first_line:?}"
        );
        assert_eq!(first_line, want);
        std::fs::remove_file(&file).ok();
    }
}

#[test]
fn census_order_three_counts() {
    let out = zdg(&["census", "--order", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // 2 algebras of order 2, 6 of order 3, one summary line.
    assert_eq!(lines.len(), 9, "{text}");
    assert!(lines[8].contains("\"count_per_order\":{\"2\":2,\"3\":6}"));
    let again = zdg(&["census", "--order", "3"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn census_above_limit_exits_2() {
    let out = zdg(&["census", "--order", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn harness_rings_json_is_deterministic_and_green() {
    let a = zdg(&["harness", "--corpus", "rings", "--json"]);
    assert!(a.status.success(), "harness failed: {}", stdout(&a));
    let b = zdg(&["harness", "--corpus", "rings", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("\"fail\": 0"));
}

#[test]
fn harness_single_theorem_filter() {
    let out = zdg(&["harness", "--corpus", "rings", "--theorem", "L8_3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("L8_3: 4 applicable"), "{text}");
}

#[test]
fn harness_rejects_unknown_corpus_and_theorem() {
    assert_eq!(
        zdg(&["harness", "--corpus", "everything"]).status.code(),
        Some(2)
    );
    assert_eq!(
        zdg(&["harness", "--corpus", "rings", "--theorem", "T0_0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn iso_exit_codes() {
    let z4 = tmp("z4.json");
    let t2z2 = tmp("t2z2.json");
    assert!(
        zdg(&["build", "zn", "--n", "4", "-o", z4.to_str().unwrap()])
            .status
            .success()
    );
    assert!(
        zdg(&["build", "t2zn", "--n", "2", "-o", t2z2.to_str().unwrap()])
            .status
            .success()
    );
    let same = zdg(&["iso", z4.to_str().unwrap(), z4.to_str().unwrap()]);
    assert_eq!(same.status.code(), Some(0));
    assert!(stdout(&same).contains("isomorphic"));
    let diff = zdg(&["iso", z4.to_str().unwrap(), t2z2.to_str().unwrap()]);
    assert_eq!(diff.status.code(), Some(1));
    assert!(stdout(&diff).contains("not isomorphic"));
    let missing = zdg(&["iso", z4.to_str().unwrap(), "/nonexistent.json"]);
    assert_eq!(missing.status.code(), Some(2));
    std::fs::remove_file(&z4).ok();
    std::fs::remove_file(&t2z2).ok();
}

#[test]
fn malformed_algebra_file_exits_2() {
    let file = tmp("bad.json");
    std::fs::write(&file, "{\"name\":\"bad\",\"order\":2}").unwrap();
    let out = zdg(&["graph", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&file).ok();
}

#[test]
fn closure_cap_env_var_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_zdg"))
        .args(["build", "ex34", "--n", "4"])
        .env("ZDG_CLOSURE_CAP", "2")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("cap of 2"), "{err}");
}

#[test]
fn jobs_flag_keeps_output_stable() {
    let one = zdg(&["harness", "--corpus", "rings", "--json", "--jobs", "1"]);
    let four = zdg(&["harness", "--corpus", "rings", "--json", "--jobs", "4"]);
    assert_eq!(one.stdout, four.stdout);
}
