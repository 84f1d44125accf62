//! Exit-code and I/O contract of the command-line front end.

use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn opineq(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_opineq"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn analyze_malformed_file_exits_2_naming_the_line() {
    let out = opineq(&["analyze", &fixture("malformed.txt")]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 3"), "stderr: {stderr}");
}

#[test]
fn analyze_missing_file_exits_2() {
    let out = opineq(&["analyze", "no/such/file.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_zero_matrix_reports_undefined_constants() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.txt");
    std::fs::write(&path, "2 2\n0 0 0 0\n0 0 0 0\n").unwrap();
    let out = opineq(&["analyze", path.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["profile"]["numerical_radius"].as_f64(), Some(0.0));
    assert!(doc["profile"]["alpha_sq"].is_null());
    assert_eq!(doc["profile"]["kernels_equal"].as_bool(), Some(true));
}

#[test]
fn verify_unknown_theorem_exits_2() {
    let out = opineq(&[
        "verify",
        &fixture("identity_2x2.txt"),
        "--theorem",
        "no-such-check",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_kernel_mismatch_exits_2_with_explanation() {
    let out = opineq(&[
        "verify",
        &fixture("upper_shift_2x2.txt"),
        "--theorem",
        "buzano-radius",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("ker(T)"), "stderr: {stderr}");
}

#[test]
fn verify_default_grid_runs_both_modes() {
    let out = opineq(&[
        "verify",
        &fixture("lower_triangular_2x2.txt"),
        "--theorem",
        "buzano-radius",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let reports = doc["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2, "printed and corrected by default");
    assert!(doc["profile"]["alpha_sq"].as_f64().is_some());
}

#[test]
fn verify_accepts_complex_parameters() {
    let out = opineq(&[
        "verify",
        &fixture("lower_triangular_2x2.txt"),
        "--theorem",
        "dunkl-williams",
        "--lambda",
        "1+2i",
        "--mode",
        "corrected",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // Complex scalars serialize as [re, im] pairs.
    let lam = &doc["reports"][0]["params"]["lambda"];
    assert_eq!(lam[0].as_f64(), Some(1.0));
    assert_eq!(lam[1].as_f64(), Some(2.0));

    let bad = opineq(&[
        "verify",
        &fixture("lower_triangular_2x2.txt"),
        "--theorem",
        "dunkl-williams",
        "--lambda",
        "one",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn sweep_rejects_zero_count_and_unknown_kind() {
    let out = opineq(&[
        "sweep", "--kind", "gaussian", "--dim", "2", "--count", "0", "--seed", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("count"), "stderr: {stderr}");

    let out = opineq(&[
        "sweep", "--kind", "nope", "--dim", "2", "--count", "1", "--seed", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_printed_mode_can_refute() {
    // Diagonal operators are normal (alpha = beta = 1); the printed
    // parallelogram form fails on every one of them at p = 2.
    let out = opineq(&[
        "sweep",
        "--kind",
        "diagonal",
        "--dim",
        "2",
        "--count",
        "3",
        "--seed",
        "5",
        "--theorems",
        "parallelogram-power",
        "--mode",
        "printed",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(doc["summary"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn pinv_writes_a_parseable_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("pinv.txt");
    let out = opineq(&[
        "pinv",
        &fixture("lower_triangular_2x2.txt"),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&out_path).unwrap();
    let m = opineq::matfile::parse_matrix(&text).unwrap();
    let expected =
        opineq::matrix::Matrix::from_real_rows(&[&[1.0, 0.0], &[-1.0, 1.0]]);
    assert!(m.sub(&expected).frobenius_norm() < 1e-12);
}

#[test]
fn douglas_identical_files_give_identity_factor() {
    let out = opineq(&[
        "douglas",
        &fixture("lower_triangular_2x2.txt"),
        &fixture("lower_triangular_2x2.txt"),
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let f = &doc["factorizations"][0];
    assert!(f["residual"].as_f64().unwrap() < 1e-10);
    assert!((f["factor_norm"].as_f64().unwrap() - 1.0).abs() < 1e-8);
    assert!((f["certified_infimum"].as_f64().unwrap() - 1.0).abs() < 1e-7);
    assert_eq!(f["kernel_match"].as_bool(), Some(true));
}

#[test]
fn douglas_disjoint_ranges_exit_1() {
    let out = opineq(&[
        "douglas",
        &fixture("diag_0_1.txt"),
        &fixture("diag_1_0.txt"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("range containment fails"), "stderr: {stderr}");
}

#[test]
fn json_report_documents_round_trip() {
    let out = opineq(&[
        "verify",
        &fixture("lower_triangular_2x2.txt"),
        "--theorem",
        "ds-lower",
        "--json",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let doc = opineq::report::ReportDocument::from_json(&text).unwrap();
    assert_eq!(doc.to_json(), text.trim_end());
}

#[test]
fn tolerance_flags_are_honored() {
    // An absurdly loose slack turns the printed refutation into a pass.
    let out = opineq(&[
        "verify",
        &fixture("identity_2x2.txt"),
        "--theorem",
        "parallelogram-power",
        "--mode",
        "printed",
        "--p",
        "2",
        "--tol-slack",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));

    let bad = opineq(&[
        "analyze",
        &fixture("identity_2x2.txt"),
        "--tol-eig",
        "-1",
    ]);
    assert_eq!(bad.status.code(), Some(2));
}
