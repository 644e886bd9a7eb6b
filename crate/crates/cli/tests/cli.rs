//! End-to-end tests driving the compiled binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const FIG1: &str = "\
field gf(5)
vars X Y Z
params t0 t1
form X*Y^2
form -Y^2*Z
section x = (tau, 0, 1); t = (1, tau); r = 3
";

const ZARISKI: &str = "\
field gf(4)
vars X Y Z
params t0 t1
form X^2
form -Y^2
section x = (tau^2, 1, 0); t = (1, tau); r = 2
";

const FAMILY: &str = "\
field q
vars X Y Z
params t
family Y^2*Z - (X - t*Z)^3
section x = (tau, 0, 1); t = (tau); r = 2
";

fn write_doc(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).expect("write document");
    path
}

fn pencilbox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pencilbox"))
        .args(args)
        .output()
        .expect("run binary")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn show_prints_the_document_summary() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_doc(&dir, "fig1.txt", FIG1);
    let out = pencilbox(&["show", doc.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("field: gf(5)"), "got: {text}");
    assert!(text.contains("degree: 3"), "got: {text}");
    assert!(text.contains("X*Y^2"), "got: {text}");
}

#[test]
fn fixed_reports_the_shared_factor() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_doc(&dir, "fig1.txt", FIG1);
    let out = pencilbox(&["fixed", doc.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("fixed component: Y^2"),
        "got: {}",
        stdout(&out)
    );
}

#[test]
fn base_locus_lists_projective_points() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_doc(&dir, "fig1.txt", FIG1);
    let out = pencilbox(&["base-locus", doc.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("1 base point(s)"), "got: {text}");
    assert!(text.contains("(0 : 1 : 0)"), "got: {text}");
}

#[test]
fn check_first_json_report_is_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_doc(&dir, "fig1.txt", FIG1);
    let out = pencilbox(&["--json", "check-first", doc.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["schema"], "pencilbox/1");
    assert_eq!(v["command"], "check-first");
    assert_eq!(v["field"], "gf(5)");
    assert_eq!(v["verdict"], "holds");
    assert_eq!(v["separability"], "separable");
    assert_eq!(v["section_in_locus"], true);
    assert_eq!(v["conclusion_holds"], true);
}

#[test]
fn violated_statement_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_doc(&dir, "zariski.txt", ZARISKI);
    let out = pencilbox(&["--json", "check-singular", doc.to_str().unwrap()]);
    assert_eq!(code(&out), 1, "stderr: {}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["verdict"], "violated");
    assert_eq!(v["base_points"], 1);
}

#[test]
fn inseparable_section_is_not_applicable() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_doc(&dir, "zariski.txt", ZARISKI);
    let out = pencilbox(&["--json", "check-first", doc.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["verdict"], "not applicable");
    assert_eq!(v["separability"], "inseparable");
    assert_eq!(v["conclusion_holds"], false);
}

#[test]
fn multiplicity_evaluates_one_point() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_doc(&dir, "fig1.txt", FIG1);
    let out = pencilbox(&[
        "--json",
        "multiplicity",
        doc.to_str().unwrap(),
        "--point",
        "2,0,1",
        "--member",
        "1,2",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["multiplicity"], 3);
}

#[test]
fn family_document_rejects_basis_commands() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_doc(&dir, "family.txt", FAMILY);
    let out = pencilbox(&["fixed", doc.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("family"), "got: {}", stderr(&out));
}

#[test]
fn missing_file_exits_two() {
    let out = pencilbox(&["base-locus", "/definitely/not/here.txt"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("error:"), "got: {}", stderr(&out));
}

#[test]
fn out_of_range_section_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write_doc(&dir, "fig1.txt", FIG1);
    let out = pencilbox(&["check-first", doc.to_str().unwrap(), "--section", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("section 3"), "got: {}", stderr(&out));
}

#[test]
fn corpus_lists_every_example() {
    let out = pencilbox(&["corpus"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for name in [
        "fig1-left",
        "fig1-right",
        "fig2",
        "fig3",
        "zariski-p2",
        "zariski-p3",
        "zariski-p-sep",
        "quadric-pair",
        "veronese-net",
        "coordinate-net",
        "conic-pencil",
    ] {
        assert!(text.contains(name), "missing {name} in: {text}");
    }
}

#[test]
fn corpus_runs_one_example() {
    let out = pencilbox(&["--json", "corpus", "fig1-left"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().map_or(0, Vec::len) > 0);
}

#[test]
fn corpus_show_prints_the_document() {
    let out = pencilbox(&["corpus", "quadric-pair", "--show"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("field gf(5)"), "got: {text}");
    assert!(text.contains("form X0^2"), "got: {text}");
}

#[test]
fn unknown_corpus_name_exits_two() {
    let out = pencilbox(&["corpus", "no-such-example"]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("no-such-example"),
        "got: {}",
        stderr(&out)
    );
}
