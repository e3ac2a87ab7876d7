//! End-to-end tests of the `altrun` binary: output shapes, exit codes and
//! determinism.

use std::process::{Command, Output};

use altrun::exact::Int;
use altrun::families::{triangle_entry, TriangleId};

fn altrun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altrun"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn compute_json_shape() {
    let out = altrun(&[
        "compute", "--family", "R", "--n", "4", "--method", "triangle", "--format", "json",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"family\":\"R\",\"n\":4,\"method\":\"triangle\",\"coeffs\":[0,2,12,10]}\n"
    );
}

#[test]
fn compute_text_and_csv() {
    let out = altrun(&["compute", "--family", "T", "--n", "3"]);
    assert_eq!(stdout(&out), "T_3(x) = x + 12x^2 + 11x^3\n");
    let csv = altrun(&["compute", "--family", "T", "--n", "3", "--format", "csv"]);
    assert_eq!(stdout(&csv), "k,coeff\n0,0\n1,1\n2,12\n3,11\n");
}

#[test]
fn compute_bivariate_json() {
    let out = altrun(&["compute", "--family", "Andre", "--n", "4", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["family"], "Andre");
    assert_eq!(value["terms"][0]["xexp"], 1);
    assert_eq!(value["terms"][0]["yexp"], 3);
    assert_eq!(value["terms"][0]["coeff"], 1);
    assert_eq!(value["terms"][1]["coeff"], 4);
}

#[test]
fn huge_coefficients_become_strings() {
    let out = altrun(&["compute", "--family", "B", "--n", "25", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let coeffs = value["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 26);
    // Small coefficients stay numbers; the bulk of the row cannot fit in
    // 53 bits and must arrive as exact decimal strings.
    assert_eq!(coeffs[0], 1);
    let middle = coeffs[12].as_str().expect("large coefficient is a string");
    let parsed: Int = middle.parse().unwrap();
    assert!(parsed > Int::from(1u64 << 53));
}

#[test]
fn verify_suite_exit_codes() {
    let ok = altrun(&["verify", "--suite", "bona", "--max-n", "6"]);
    assert_eq!(ok.status.code(), Some(0));
    let flagged = altrun(&["verify", "--suite", "qi_flag"]);
    assert_eq!(flagged.status.code(), Some(0));
    let strict = altrun(&["verify", "--suite", "qi_flag", "--strict-flags"]);
    assert_eq!(strict.status.code(), Some(1));
    let unknown = altrun(&["verify", "--suite", "no_such_check"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    let out = altrun(&["compute", "--family", "X", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown family"), "{err}");

    let bad_flag = altrun(&["compute", "--family"]);
    assert_eq!(bad_flag.status.code(), Some(2));

    let bad_method = altrun(&["compute", "--family", "R", "--n", "3", "--method", "nope"]);
    assert_eq!(bad_method.status.code(), Some(2));

    let help = altrun(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn table_csv_matches_triangle_entries() {
    let out = altrun(&["table", "--family", "R", "--rows", "8", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,value"));
    let mut count = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 3, "{line}");
        let n: usize = fields[0].parse().unwrap();
        let k: usize = fields[1].parse().unwrap();
        let value: Int = fields[2].parse().unwrap();
        assert_eq!(value, triangle_entry(TriangleId::R, n, k), "at ({n}, {k})");
        count += 1;
    }
    // Row n carries entries k = 0..n-1.
    assert_eq!(count, (1..=8).sum::<usize>());
}

#[test]
fn det_formats() {
    let text = altrun(&["det", "--variant", "kit93", "--n", "2"]);
    let body = stdout(&text);
    assert!(body.contains("det = 9"), "{body}");
    let json = altrun(&["det", "--variant", "kit93", "--n", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["order"], 2);
    assert_eq!(value["det_coeffs"][0], 9);
    assert_eq!(value["entries"][1][0], "3");
    let csv = altrun(&["det", "--variant", "qi_tridiagonal", "--n", "2", "--format", "csv"]);
    let body = stdout(&csv);
    assert!(body.starts_with("row,col,value\n"));
    assert_eq!(body.lines().count(), 1 + 9);
}

#[test]
fn reruns_are_bit_identical() {
    for args in [
        vec!["compute", "--family", "F", "--n", "6", "--format", "json"],
        vec!["det", "--variant", "t_ts_thm", "--n", "4", "--format", "json"],
        vec!["verify", "--suite", "bona,div_s,qi_flag,det_oracle", "--format", "json"],
        vec!["table", "--family", "T", "--rows", "6", "--format", "csv"],
    ] {
        let first = altrun(&args);
        let second = altrun(&args);
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn verify_text_report_shape() {
    let out = altrun(&["verify", "--suite", "bona,qi_flag", "--format", "text"]);
    let body = stdout(&out);
    assert!(body.contains("PASS  bona"), "{body}");
    assert!(body.contains("FLAG  qi_flag"), "{body}");
    assert!(body.contains("1 passed, 0 failed, 1 flagged"), "{body}");
}
