//! End-to-end tests driving the binary: file formats, exit codes, golden
//! report, and output determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_b3cat"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    let mut cmd = bin();
    cmd.current_dir(dir);
    cmd.args(args);
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn tempdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("b3cat-test-{tag}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

#[test]
fn tables_text_and_json() {
    let dir = tempdir("tables");
    let out = run_in(&dir, &["tables"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("23 triples"));
    assert!(text.contains("15 triples"));
    // Row (0,0,3) shows 3 delta = 3 pi / 4.
    assert!(text.contains("(0, 0, 3)  half-length 2.356194"));

    let out = run_in(&dir, &["tables", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["tables"]["short"].as_array().unwrap().len(), 23);
    assert_eq!(doc["tables"]["reduced"].as_array().unwrap().len(), 15);
}

#[test]
fn coxeter_b3_with_golden_check_report() {
    let dir = tempdir("coxeter");
    let out = run_in(&dir, &["coxeter", "B3", "-o", "cb3.cplx"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("26 vertices, 72 edges, 48 chambers"));

    let file = fs::read_to_string(dir.join("cb3.cplx")).unwrap();
    assert_eq!(file.lines().filter(|l| l.starts_with("v ")).count(), 26);
    assert_eq!(file.lines().filter(|l| l.starts_with("t ")).count(), 48);
    let coords = fs::read_to_string(dir.join("cb3.cplx.coords")).unwrap();
    assert_eq!(coords.lines().count(), 26);

    // Golden report, frozen after the first exact run: C(B_3) passes
    // conditions (1)-(4) and (6); with chords permitted condition (5) fails
    // on the 24 corner hexagons and 24 face 8-cycles of the cube model.
    let out = run_in(&dir, &["check", "--json", "cb3.cplx"]);
    assert_eq!(out.status.code(), Some(1));
    let got = stdout(&out);
    let golden = include_str!("golden/cb3_report.json");
    assert_eq!(got.trim(), golden.trim(), "golden C(B_3) report drifted");

    // With induced-cycle matching the whole criterion passes.
    let out = run_in(&dir, &["check", "--induced", "cb3.cplx"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("CAT(1)"));
}

#[test]
fn coxeter_other_diagrams() {
    let dir = tempdir("coxeter2");
    let out = run_in(&dir, &["coxeter", "A2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("6-gon"));

    let out = run_in(&dir, &["coxeter", "F4"]);
    assert_eq!(out.status.code(), Some(3));

    // A4 is a built-in diagram but has rank 4: no complex output.
    let out = run_in(&dir, &["coxeter", "A4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_negative_fixtures() {
    let dir = tempdir("fixtures");
    let cases = [
        ("bad_girth.cplx", "2"),
        ("bad_bipartite.cplx", "3"),
        ("bad_filling.cplx", "5"),
    ];
    for (file, expected) in cases {
        let path = fixture(file);
        let out = run_in(&dir, &["check", "--json", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{file}");
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        for n in 1..=6 {
            let status = doc["condition"][&n.to_string()]["status"].as_str().unwrap();
            let want = if n.to_string() == expected { "fail" } else { "pass" };
            assert_eq!(status, want, "{file} condition {n}");
        }
    }
}

#[test]
fn check_one_simplex_reports_detail() {
    let dir = tempdir("simplex");
    let path = fixture("one_simplex.cplx");
    let out = run_in(&dir, &["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    for n in 1..=6 {
        assert!(text.contains(&format!("condition ({n})")));
    }
    assert!(text.contains("no embedded 4-cycle"));
}

#[test]
fn check_invalid_input() {
    let dir = tempdir("invalid");
    fs::write(dir.join("bad.cplx"), "v a s9\n").unwrap();
    let out = run_in(&dir, &["check", "bad.cplx"]);
    assert_eq!(out.status.code(), Some(3));

    // Valid syntax, invalid complex (isolated vertex): also 3.
    fs::write(dir.join("lonely.cplx"), "v a s1\n").unwrap();
    let out = run_in(&dir, &["check", "lonely.cplx"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn ball_exports_are_deterministic() {
    let dir = tempdir("ball");
    let out = run_in(&dir, &["ball", "B3", "0", "-o", "r0.cplx"]);
    assert!(out.status.success());
    let file = fs::read_to_string(dir.join("r0.cplx")).unwrap();
    assert_eq!(file.lines().filter(|l| l.starts_with("t ")).count(), 1);

    let out = run_in(&dir, &["ball", "B3", "2", "-o", "a.cplx"]);
    assert!(stdout(&out).contains("33 chambers, 31 vertex classes"));
    let out2 = run_in(&dir, &["ball", "B3", "2", "-o", "b.cplx"]);
    assert!(out2.status.success());
    assert_eq!(
        fs::read(dir.join("a.cplx")).unwrap(),
        fs::read(dir.join("b.cplx")).unwrap()
    );
    assert_eq!(
        fs::read(dir.join("a.cplx.words")).unwrap(),
        fs::read(dir.join("b.cplx.words")).unwrap()
    );

    // Ball exports are truncations: the checker reports inconclusive.
    let out = run_in(&dir, &["check", "--ball", "a.cplx"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run_in(&dir, &["ball", "A5", "1", "-o", "a5.txt"]);
    assert!(stdout(&out).contains("poset-only"));
    let text = fs::read_to_string(dir.join("a5.txt")).unwrap();
    assert_eq!(text.lines().count(), 15);
    assert!(text.lines().any(|l| l.starts_with("s5_") && l.contains(" t5 ")));
}

#[test]
fn verify_paper_quick_run_is_reproducible() {
    let dir = tempdir("verify");
    let args = [
        "verify-paper",
        "--seed",
        "7",
        "--oracle-len",
        "3",
        "--injectivity-len",
        "2",
        "--join-sets",
        "5",
        "--radius-b3",
        "2",
        "--radius-a5",
        "1",
    ];
    let out1 = run_in(&dir, &args);
    assert_eq!(out1.status.code(), Some(0), "{}", stdout(&out1));
    assert!(stdout(&out1).contains("overall: pass"));
    let out2 = run_in(&dir, &args);
    assert_eq!(stdout(&out1), stdout(&out2), "same seed, same report");
}

#[test]
fn group_cap_env_var_guards_enumeration() {
    let dir = tempdir("cap");
    let mut cmd = bin();
    cmd.current_dir(&dir);
    cmd.env("B3CAT_GROUP_CAP", "10");
    cmd.args(["coxeter", "B3"]);
    let out = cmd.output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}
