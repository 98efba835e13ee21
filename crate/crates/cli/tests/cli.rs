use std::io::Write;
use std::process::Command;

use serde_json::Value;
use tempfile::NamedTempFile;
use torsym_cli::{run, EXIT_INPUT, EXIT_OK};

const IDENTITY: &str = "[[1,0],[0,1]]";

fn bundle_file(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn first_monodromy(first: &str, m: i64, n: i64) -> NamedTempFile {
    bundle_file(&format!(
        r#"{{"genus": 2, "monodromy": [{first}, {IDENTITY}, {IDENTITY}, {IDENTITY}], "euler": [{m}, {n}]}}"#
    ))
}

fn torsym(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("torsym").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn torsym_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--format=json");
    let (code, out, err) = torsym(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn classify_principal_bundle() {
    let f = first_monodromy(IDENTITY, 1, 1);
    let (code, out, _) = torsym(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.starts_with("symplectic: no (Theorem: principal, mn ≠ 0)"),
        "{out}"
    );
    assert!(out.contains("cross-check spectral ranks: agree"));
}

#[test]
fn classify_rotation_bundle_json() {
    let f = first_monodromy("[[0,-1],[1,0]]", 5, 7);
    let v = torsym_json(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(v["symplectic"], true);
    assert_eq!(v["b1"], 4);
    assert_eq!(v["b2"], 6);
    assert_eq!(v["cross_checks"]["spectral"], true);
    assert_eq!(v["rationale"][1]["rule"], "no fiber circle action");
}

#[test]
fn classify_rejects_non_representation() {
    let f = bundle_file(&format!(
        r#"{{"genus": 2, "monodromy": [[[1,1],[0,1]], [[1,0],[1,1]], {IDENTITY}, {IDENTITY}], "euler": [0, 0]}}"#
    ));
    let (code, _, err) = torsym(&["classify", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("surface relation"), "{err}");
}

#[test]
fn homology_reports() {
    let f = first_monodromy("[[0,-1],[1,0]]", 0, 0);
    let (code, out, _) = torsym(&["homology", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("H1: Z^4 + Z_2"));
    assert!(out.contains("trichotomy: no circle action"));

    let f = first_monodromy("[[1,1],[0,1]]", 0, 1);
    let v = torsym_json(&["homology", f.path().to_str().unwrap()]);
    assert_eq!(v["b1"], 4);
    assert_eq!(v["trichotomy"], Value::Null);
    assert_eq!(v["fixed_lattice_rank"], 1);
}

#[test]
fn spectral_reports() {
    let f = first_monodromy("[[1,1],[0,1]]", 0, 0);
    let (code, out, _) = torsym(&["spectral", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("q=1: 1 6 1"), "{out}");
    assert!(out.contains("fiber class nonzero: yes"));

    let v = torsym_json(&["spectral", f.path().to_str().unwrap()]);
    assert_eq!(v["e2_ranks"][1][1], 6);
}

#[test]
fn swpoly_output() {
    let (code, out, _) = torsym(&["swpoly", "--genus", "2", "--n", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "SW(g=2, n=5) = -2 + 1*t^1 + 1*t^4");

    let v = torsym_json(&["swpoly", "--genus", "2", "--n", "-4"]);
    assert_eq!(v["coefficients"], serde_json::json!([2, 0, -2, 0]));
}

#[test]
fn sw0_output() {
    let (code, out, _) = torsym(&["sw0", "--genus", "2", "--m", "3", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("sw(0) = -2\n"));
    assert!(out.contains("routes agree: yes"));

    let v = torsym_json(&["sw0", "--genus", "2", "--m", "-1", "--n", "-4"]);
    assert_eq!(v["closed"], Value::Null);
    assert_eq!(v["even"], true);
}

#[test]
fn sw0_big_values_are_exact_in_json() {
    // With m = n both subgroups are trivial and the value is -C(78, 39).
    let v = torsym_json(&["sw0", "--genus", "40", "--m", "200", "--n", "200"]);
    assert_eq!(v["value"].to_string(), "-27217014869199032015600");
    assert_eq!(v["value"], v["closed"]);
}

#[test]
fn verify_parity_small_grid() {
    let (code, out, _) = torsym(&["verify-parity", "--g", "2..4", "--mn", "-3..3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("cases: 108"));
    assert!(out.contains("skipped: 39"));
    assert!(out.contains("all even: yes"));
    assert!(out.contains("counterexamples: 0"));
}

#[test]
fn input_errors_exit_one() {
    let cases: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["swpoly", "--genus", "2"],
        &["swpoly", "--genus", "1", "--n", "3"],
        &["swpoly", "--genus", "2", "--n", "0"],
        &["sw0", "--genus", "2", "--m", "1", "--n", "zero"],
        &["verify-parity", "--g", "1..3", "--mn", "1..2"],
        &["verify-parity", "--g", "5..2", "--mn", "1..2"],
        &["classify", "/nonexistent/bundle.json"],
    ];
    for args in cases {
        let (code, _, err) = torsym(args);
        assert_eq!(code, EXIT_INPUT, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_bundles_name_the_field() {
    let cases = [
        (
            r#"{"genus": 2, "monodromy": [], "euler": [0,0]}"#,
            "monodromy",
        ),
        (
            r#"{"genus": "two", "monodromy": [], "euler": [0,0]}"#,
            "genus",
        ),
        (
            r#"{"genus": 2, "monodromy": [[[2,0],[0,1]],[[1,0],[0,1]],[[1,0],[0,1]],[[1,0],[0,1]]], "euler": [0,0]}"#,
            "monodromy[0]",
        ),
        (
            r#"{"genus": 2, "monodromy": [[[1,0],[0,1]],[[1,0],[0,1]],[[1,0],[0,1]],[[1,0],[0,1]]]}"#,
            "euler",
        ),
        ("not json", "document"),
    ];
    for (json, field) in cases {
        let f = bundle_file(json);
        let (code, _, err) = torsym(&["homology", f.path().to_str().unwrap()]);
        assert_eq!(code, EXIT_INPUT, "{json}");
        assert!(err.contains(field), "expected `{field}` in: {err}");
    }
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = torsym(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify-parity"));
}

#[test]
fn output_is_deterministic() {
    let f = first_monodromy("[[2,1],[1,1]]", 3, -2);
    let path = f.path().to_str().unwrap();
    for args in [
        vec!["classify", path],
        vec!["homology", path, "--format=json"],
        vec![
            "verify-parity",
            "--g",
            "2..3",
            "--mn",
            "-4..4",
            "--format=json",
        ],
    ] {
        assert_eq!(torsym(&args), torsym(&args));
    }
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_torsym");
    let ok = Command::new(exe)
        .args(["sw0", "--genus", "2", "--m", "3", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("sw(0) = -2"));
    let bad = Command::new(exe)
        .args(["sw0", "--genus", "2"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
