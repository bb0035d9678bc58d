//! Command-line behavior beyond the acceptance round trip: the spectral
//! command replayed through files, CSV import, and the QD_TOL override.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_qd")
}

fn workdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qd-cli-{}-{}", tag, std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run_json(args: &[&str]) -> (Option<i32>, serde_json::Value) {
    let output = Command::new(bin()).args(args).output().unwrap();
    let value = serde_json::from_slice(&output.stdout).unwrap_or(serde_json::Value::Null);
    (output.status.code(), value)
}

#[test]
fn spectral_fixtures_replayed_through_files() {
    let dir = workdir("spectral");

    // Infinite excess with A_F = 0.25.
    let inf = dir.join("inf.json");
    std::fs::write(&inf, r#"{ "ess": [0.5, 1.0], "excess": "inf" }"#).unwrap();
    let (code, report) = run_json(&["spectral", inf.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert_eq!(report["alpha"].as_f64().unwrap(), 0.5);
    assert_eq!(report["beta"].as_f64().unwrap(), 2.0);
    assert_eq!(report["attained"], "yes_with_scalar_fx_star");

    // Finite excess 1 with outliers: alpha = 1.5.
    let fin = dir.join("fin.json");
    std::fs::write(
        &fin,
        r#"{ "ess": [1.0, 2.0], "above": [[3.0, 1], [2.5, 1]], "below": [[0.0, 1]], "excess": 1 }"#,
    )
    .unwrap();
    let (code, report) = run_json(&["spectral", fin.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert_eq!(report["alpha"].as_f64().unwrap(), 1.5);
    assert_eq!(report["beta"], serde_json::Value::Null);

    // Parseval-like model: alpha = 0, bounds hypothesis not met, so the
    // bounds field is absent rather than wrong.
    let parseval = dir.join("parseval.json");
    std::fs::write(&parseval, r#"{ "ess": [1.0, 1.0], "excess": "inf" }"#).unwrap();
    let (code, report) = run_json(&["spectral", parseval.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert_eq!(report["alpha"].as_f64().unwrap(), 0.0);
    assert_eq!(report["alpha_bounds"], serde_json::Value::Null);

    // Invalid model: numerical failure.
    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{ "ess": [0.0, 1.0], "excess": "inf" }"#).unwrap();
    let output = Command::new(bin())
        .args(["spectral", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn csv_frames_are_accepted_for_real_input() {
    let dir = workdir("csv");
    let path = dir.join("frame.csv");
    std::fs::write(&path, "1, 0\n0, 1\n1, 1\n").unwrap();
    let (code, report) = run_json(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert_eq!(report["n"], 2);
    assert_eq!(report["m"], 3);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn qd_tol_env_threads_into_the_existence_predicate() {
    let dir = workdir("tol");
    let path = dir.join("frame.json");
    // S_F spectrum (1.2, 0.98): no Parseval dual at the default tolerance.
    let root = 0.98f64.sqrt();
    std::fs::write(
        &path,
        format!(
            r#"{{ "n": 2, "m": 4, "vectors": [[[1.0954451150103321,0],[0,0]], [[0,0],[{},0]], [[0,0],[0,0]], [[0,0],[0,0]]] }}"#,
            root
        ),
    )
    .unwrap();

    let (code, report) = run_json(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert_eq!(report["parseval_dual_exists"], serde_json::json!(false));
    assert_eq!(report["tolerances"]["tol_fp"].as_f64().unwrap(), 1e-8);

    let output = Command::new(bin())
        .args(["analyze", path.to_str().unwrap()])
        .env("QD_TOL", "0.05")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(report["parseval_dual_exists"], serde_json::json!(true));
    assert_eq!(report["tolerances"]["tol_fp"].as_f64().unwrap(), 0.05);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn reports_echo_inputs_and_are_schema_complete() {
    let dir = workdir("schema");
    let path = dir.join("frame.json");
    std::fs::write(
        &path,
        r#"{ "n": 2, "m": 3, "vectors": [[[2,0],[0,0]], [[0,0],[1,0]], [[0,0],[0,0]]] }"#,
    )
    .unwrap();
    for (args, keys) in [
        (
            vec!["analyze", path.to_str().unwrap()],
            vec!["command", "version", "input", "tolerances", "n", "m", "excess", "frame_bounds", "gramian_spectrum", "parseval_dual_exists", "canonical_dual"],
        ),
        (
            vec!["quasidual", path.to_str().unwrap(), "--norm", "kf2"],
            vec!["command", "version", "input", "tolerances", "norm", "d", "r", "alpha", "residual_norm", "worst_case_error", "coisometry_residual", "quasidual"],
        ),
        (
            vec!["certify", path.to_str().unwrap(), "--samples", "50"],
            vec!["command", "version", "input", "tolerances", "norm", "samples", "seed", "alpha", "min_error_sampled", "violations", "passed"],
        ),
    ] {
        let (code, report) = run_json(&args);
        assert_eq!(code, Some(0), "{:?}", args);
        for key in keys {
            assert!(report.get(key).is_some(), "{:?} lacks {}", args, key);
        }
        // Numeric fields must be finite (serde_json refuses NaN/inf anyway;
        // make the expectation explicit for the top-level alpha).
        if let Some(alpha) = report.get("alpha") {
            assert!(alpha.as_f64().unwrap().is_finite());
        }
    }
    std::fs::remove_dir_all(&dir).ok();
}
