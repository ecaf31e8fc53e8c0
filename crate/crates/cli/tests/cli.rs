//! End-to-end tests of the `fpext` binary: verbs, output, exit codes, and
//! file round-trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_fpext")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

const Z2_OVER_Z: &str = r#"{"ring": "Z", "generators": 1, "relations": [[2]]}"#;
const Z2_OVER_Z4: &str = r#"{"ring": {"Zmod": 4}, "generators": 1, "relations": [[2]]}"#;
const Z_FREE: &str = r#"{"ring": "Z", "generators": 1, "relations": []}"#;

/// 0 -> Z --2--> Z -> Z/2 -> 0
fn mult2_seq(dir: &Path) -> PathBuf {
    write(
        dir,
        "mult2.json",
        r#"{
            "modules": ["z.json", "z.json", "z2.json"],
            "arrows": [[[2]], [[1]]]
        }"#,
    )
}

fn setup(dir: &Path) {
    write(dir, "z.json", Z_FREE);
    write(dir, "z2.json", Z2_OVER_Z);
    write(dir, "z2z4.json", Z2_OVER_Z4);
}

#[test]
fn ext_verb_prints_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let z2 = dir.path().join("z2.json");
    let out = run(&["ext", "-n", "1", z2.to_str().unwrap(), z2.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "Z/2");
}

#[test]
fn ext_verb_accepts_key_value_spelling() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let z2 = dir.path().join("z2.json");
    let out = run(&[
        "ext",
        "-n",
        "1",
        &format!("X={}", z2.display()),
        &format!("Y={}", z2.display()),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "Z/2");
}

#[test]
fn ext2_vanishes_over_z_with_json_output() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let z2 = dir.path().join("z2.json");
    let out = run(&[
        "--json",
        "ext",
        "-n",
        "2",
        z2.to_str().unwrap(),
        z2.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["decomposition"], "0");
    assert_eq!(v["order"], "1");
}

#[test]
fn pd_reports_infinite_with_period() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let m = dir.path().join("z2z4.json");
    let out = run(&["pd", m.to_str().unwrap(), "--max", "16"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "infinite (period 1)");
    let out = run(&["--json", "id", m.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["infinite"]["period"], 1);
}

#[test]
fn fd_equals_pd() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let m = dir.path().join("z2.json");
    let out = run(&["fd", m.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with('1'));
}

#[test]
fn id_over_z_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let m = dir.path().join("z2.json");
    let out = run(&["id", m.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("unsupported ring"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn verify_accepts_valid_sequence() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let seq = mult2_seq(dir.path());
    let out = run(&["verify", seq.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("valid 1-exact sequence"));
}

#[test]
fn verify_rejects_non_exact_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{
            "modules": [
                "z.json", "z.json",
                {"ring": "Z", "generators": 1, "relations": [[4]]}
            ],
            "arrows": [[[2]], [[1]]]
        }"#,
    );
    let out = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr(&out).contains("not exact at middle object 1"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let garbled = write(dir.path(), "bad.json", "{nope");
    let out = run(&["pd", garbled.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    let out = run(&["pd", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let wrong_shape = write(
        dir.path(),
        "shape.json",
        r#"{"ring": "Z", "generators": 2, "relations": [[1]]}"#,
    );
    let out = run(&["pd", wrong_shape.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn class_of_generator_sequence() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let seq = mult2_seq(dir.path());
    let out = run(&["--json", "class", seq.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ext"], "Z/2");
    assert_eq!(v["is_zero"], false);
}

#[test]
fn split_detects_both_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let seq = mult2_seq(dir.path());
    let out = run(&["split", seq.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("does not split"));
    // the direct sum splits
    let ds = write(
        dir.path(),
        "ds.json",
        r#"{
            "modules": [
                "z2.json",
                {"ring": "Z", "generators": 2, "relations": [[2, 0], [0, 2]]},
                "z2.json"
            ],
            "arrows": [[[1], [0]], [[0, 1]]]
        }"#,
    );
    let out = run(&["split", ds.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("splits"));
}

#[test]
fn splice_and_cut_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let seq = mult2_seq(dir.path());
    // splice the mult-2 sequence with a split sequence starting at Z/2
    let second = write(
        dir.path(),
        "second.json",
        r#"{
            "modules": [
                "z2.json",
                {"ring": "Z", "generators": 2, "relations": [[2, 0]]},
                "z.json"
            ],
            "arrows": [[[1], [0]], [[0, 1]]]
        }"#,
    );
    let spliced = dir.path().join("spliced.json");
    let out = run(&[
        "splice",
        seq.to_str().unwrap(),
        second.to_str().unwrap(),
        "-o",
        spliced.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("2-exact"));
    // the written file re-parses and cuts back apart
    let left = dir.path().join("left.json");
    let right = dir.path().join("right.json");
    let out = run(&[
        "cut",
        spliced.to_str().unwrap(),
        "-i",
        "2",
        "--out-left",
        left.to_str().unwrap(),
        "--out-right",
        right.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let out = run(&["verify", left.to_str().unwrap()]);
    assert!(out.status.success());
    let out = run(&["verify", right.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn equiv_verb() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let seq = mult2_seq(dir.path());
    let out = run(&["equiv", seq.to_str().unwrap(), seq.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "equivalent");
}

#[test]
fn les_verbs_emit_certificates() {
    let dir = tempfile::tempdir().unwrap();
    setup(dir.path());
    let seq = write(
        dir.path(),
        "zseq.json",
        r#"{
            "modules": [
                "z2z4.json",
                {"ring": {"Zmod": 4}, "generators": 1, "relations": []},
                "z2z4.json"
            ],
            "arrows": [[[2]], [[1]]]
        }"#,
    );
    let a = dir.path().join("z2z4.json");
    for verb in ["les-cov", "les-con"] {
        let out = run(&[
            "--json",
            verb,
            seq.to_str().unwrap(),
            a.to_str().unwrap(),
            "--n-max",
            "2",
        ]);
        assert!(out.status.success(), "{verb}: {}", stderr(&out));
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let checks = v["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["ok"] == true), "{verb}");
    }
}

#[test]
fn gallery_unknown_scenario_exits_2() {
    let out = run(&["gallery", "no-such-scenario"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gallery_les_demo_runs() {
    let out = run(&["gallery", "les-demo", "--seed", "3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("exact at all"));
    assert!(stdout(&out).contains("all checks hold"));
}

#[test]
fn gallery_scenarios_run() {
    let out = run(&["gallery", "kadec-analogue", "--seed", "7"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("all checks hold"));
    let out = run(&["gallery", "hereditary-collapse", "--seed", "7"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("Ext^2 = 0 on every one"));
}
