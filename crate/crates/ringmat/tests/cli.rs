//! End-to-end tests of the `ringmat` binary: golden outputs, the exit-code
//! contract, and the decompose/reconstruct byte round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

use ringmat::document::{CharPolyDocument, DecompositionDocument, MatrixDocument};
use ringmat::matrix::SquareMatrix;
use ringmat::Rational;

fn write_fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ringmat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringmat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn thirds_doc() -> String {
    MatrixDocument::from_matrix(&SquareMatrix::from_str_rows(&[
        &["1/3", "1/3", "1/3"],
        &["1/3", "1/3", "1/3"],
        &["1/3", "1/3", "1/3"],
    ]))
    .to_json_string()
}

#[test]
fn charpoly_golden() {
    let path = write_fixture(
        "charpoly.json",
        r#"{ "n": 2, "rows": [["1", "2"], ["3", "4"]] }"#,
    );
    let out = run(&["charpoly", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: CharPolyDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.n, 2);
    assert_eq!(doc.text, "x^2 - 5x - 2");
    assert_eq!(doc.coefficients, vec!["1", "-5", "-2"]);
}

#[test]
fn charpoly_of_zero_matrix() {
    let path = write_fixture(
        "zero3.json",
        r#"{ "n": 3, "rows": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]] }"#,
    );
    let out = run(&["charpoly", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: CharPolyDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.text, "x^3");
    assert_eq!(doc.coefficients, vec!["1", "0", "0", "0"]);
}

#[test]
fn charpoly_rejects_oversized_matrices() {
    let n = 11;
    let rows: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { "1" } else { "0" }.to_owned()).collect())
        .collect();
    let doc = serde_json::json!({ "n": n, "rows": rows });
    let path = write_fixture("big.json", &doc.to_string());
    let out = run(&["charpoly", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exceeds"), "{}", stderr(&out));
}

#[test]
fn charpoly_rejects_non_square_input() {
    let path = write_fixture(
        "nonsquare.json",
        r#"{ "n": 2, "rows": [["1", "2", "3"], ["4", "5"]] }"#,
    );
    let out = run(&["charpoly", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("row 1 has 3 entries"), "{}", stderr(&out));
    assert!(stdout(&out).is_empty());
}

#[test]
fn verify_ch_prints_ok() {
    for body in [
        r#"{ "n": 2, "rows": [["1", "2"], ["3", "4"]] }"#,
        r#"{ "n": 1, "rows": [["7"]] }"#,
        r#"{ "n": 3, "rows": [["1/2", "-3", "0"], ["2/7", "5", "-1"], ["4", "0", "9"]] }"#,
        r#"{ "n": 6, "rows": [
            ["3", "-7", "0", "2", "9", "-4"],
            ["1", "5", "-2", "0", "6", "8"],
            ["-9", "4", "7", "1", "-3", "0"],
            ["2", "0", "-6", "5", "1", "7"],
            ["8", "-1", "3", "-5", "0", "2"],
            ["0", "6", "-4", "9", "2", "-8"]
        ] }"#,
    ] {
        let path = write_fixture("verify.json", body);
        let out = run(&["verify-ch", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
        assert_eq!(stdout(&out), "OK\n");
    }
}

#[test]
fn decompose_uniform_matrix_golden() {
    let path = write_fixture("thirds.json", &thirds_doc());
    let out = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: DecompositionDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.n, 3);
    assert_eq!(doc.terms.len(), 3);
    for term in &doc.terms {
        assert_eq!(term.weight, "1/3");
    }
    assert!(doc.steps.is_none());
}

#[test]
fn decompose_identity_is_a_single_unit_term() {
    let path = write_fixture(
        "decompose-id.json",
        r#"{ "n": 3, "rows": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]] }"#,
    );
    let out = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: DecompositionDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.terms.len(), 1);
    assert_eq!(doc.terms[0].weight, "1");
    assert_eq!(doc.terms[0].perm, vec![1, 2, 3]);
}

#[test]
fn decompose_then_reconstruct_round_trips_bytes() {
    let canonical = thirds_doc();
    let input = write_fixture("roundtrip-in.json", &canonical);
    let decomposed = run(&["decompose", input.to_str().unwrap()]);
    assert_eq!(decomposed.status.code(), Some(0));
    let mid = write_fixture("roundtrip-mid.json", &stdout(&decomposed));
    let rebuilt = run(&["reconstruct", mid.to_str().unwrap()]);
    assert_eq!(rebuilt.status.code(), Some(0));
    assert_eq!(stdout(&rebuilt), canonical, "byte-identical round trip");
}

#[test]
fn decompose_emit_steps_traces_residuals_and_cycles() {
    let path = write_fixture("steps.json", &thirds_doc());
    let out = run(&["decompose", path.to_str().unwrap(), "--emit-steps"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: DecompositionDocument = serde_json::from_str(&stdout(&out)).unwrap();
    let steps = doc.steps.expect("steps requested");
    assert_eq!(steps.len(), doc.terms.len());
    assert!(steps.last().unwrap().residual.is_none());
    assert!(steps[..steps.len() - 1].iter().all(|s| s.residual.is_some()));
    // the uniform matrix needs at least one cycle reduction on the first step
    assert!(!steps[0].cycles.is_empty());
    // the emitted document still parses as a decomposition
    let reparsed = DecompositionDocument::parse_str(&stdout(&out)).unwrap();
    assert!(reparsed.to_decomposition().is_ok());
}

#[test]
fn decompose_reports_violations_with_exit_one() {
    let path = write_fixture(
        "violation.json",
        r#"{ "n": 2, "rows": [["1/2", "1/2"], ["1/2", "1/4"]] }"#,
    );
    let out = run(&["decompose", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out), "column 2 sums to 3/4\n");
    assert!(stdout(&out).is_empty());
}

#[test]
fn check_verdicts() {
    let ok = write_fixture("check-id.json", r#"{ "n": 2, "rows": [["1", "0"], ["0", "1"]] }"#);
    let out = run(&["check", ok.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "bistochastic\n");

    let perm = write_fixture(
        "check-perm.json",
        r#"{ "n": 3, "rows": [["0", "1", "0"], ["0", "0", "1"], ["1", "0", "0"]] }"#,
    );
    let out = run(&["check", perm.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let negative = write_fixture(
        "check-neg.json",
        r#"{ "n": 2, "rows": [["3/2", "-1/2"], ["-1/2", "3/2"]] }"#,
    );
    let out = run(&["check", negative.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out), "negative entry at (1, 2): -1/2\n");
}

#[test]
fn reconstruct_golden_and_weight_violation() {
    let id = write_fixture(
        "rec-id.json",
        r#"{ "n": 3, "terms": [{ "weight": "1", "perm": [1, 2, 3] }] }"#,
    );
    let out = run(&["reconstruct", id.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: MatrixDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.rows[0], vec!["1", "0", "0"]);
    assert_eq!(doc.rows[1], vec!["0", "1", "0"]);

    // three disjoint 1/3 terms rebuild the uniform matrix
    let thirds = write_fixture(
        "rec-thirds.json",
        r#"{ "n": 3, "terms": [
            { "weight": "1/3", "perm": [1, 2, 3] },
            { "weight": "1/3", "perm": [2, 3, 1] },
            { "weight": "1/3", "perm": [3, 1, 2] }
        ] }"#,
    );
    let out = run(&["reconstruct", thirds.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: MatrixDocument = serde_json::from_str(&stdout(&out)).unwrap();
    let m = doc.to_matrix().unwrap();
    assert!(m.iter().all(|v| v == &Rational::new(1, 3)));

    // weights summing to 5/6 are a domain violation
    let bad = write_fixture(
        "rec-bad.json",
        r#"{ "n": 2, "terms": [
            { "weight": "1/2", "perm": [1, 2] },
            { "weight": "1/3", "perm": [2, 1] }
        ] }"#,
    );
    let out = run(&["reconstruct", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("weights sum to 5/6"), "{}", stderr(&out));
}

#[test]
fn malformed_inputs_exit_two() {
    let garbage = write_fixture("garbage.json", "this is not json");
    for cmd in ["charpoly", "verify-ch", "decompose", "check", "reconstruct"] {
        let out = run(&[cmd, garbage.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{cmd} must exit 2 on bad JSON");
        assert!(stdout(&out).is_empty());
    }
    let bad_entry = write_fixture(
        "bad-entry.json",
        r#"{ "n": 2, "rows": [["1", "0"], ["0", "1/0"]] }"#,
    );
    let out = run(&["check", bad_entry.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("entry (2, 2)"), "{}", stderr(&out));

    let missing = run(&["check", "/nonexistent/path.json"]);
    assert_eq!(missing.status.code(), Some(2));

    // unknown subcommands are also usage errors
    let usage = run(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn outputs_reparse_under_their_own_schema() {
    let path = write_fixture("self.json", &thirds_doc());
    let decomposed = run(&["decompose", path.to_str().unwrap()]);
    let doc = DecompositionDocument::parse_str(&stdout(&decomposed)).unwrap();
    let emitted = doc.to_json_string();
    assert_eq!(emitted, stdout(&decomposed));
}
