//! Command-line front end: analyze frames, build Parseval quasi-duals,
//! evaluate spectral models, and run sampling certificates. Reports are JSON
//! on stdout.
//!
//! Exit codes: 0 success, 1 usage, 2 parse failure, 3 numerical failure,
//! 4 certification violation.

use std::env;
use std::path::PathBuf;

use serde_json::json;

use quasidual::certify::{certify_alpha, TOL_CERT};
use quasidual::error::Error;
use quasidual::fanpall::DEFAULT_TOL_FP;
use quasidual::frame::{canonical_dual, excess, frame_bounds, Frame, TOL_DUAL};
use quasidual::io::{read_frame, read_model, write_frame, FrameFile};
use quasidual::linalg::{self, ComplexMatrix, TOL_EIG};
use quasidual::optimal::{
    construct_with_tol, optimal_spectrum_via_r, parseval_dual_exists_with_tol, PivotBranch,
};
use quasidual::spectral::{alpha_bounds, alpha_model, attainment_conditions, Excess};
use quasidual::uin::{uin_norm, UINormSpec};

const USAGE: &str = "usage: qd <command> <file> [options]

commands:
  analyze   <frame.json|frame.csv>          frame bounds, spectrum, duals
  quasidual <frame.json> [--norm N] [--out X.json]
                                            optimal Parseval quasi-dual
  spectral  <model.json>                    alpha for an infinite-dim model
  certify   <frame.json> [--norm N] [--samples K] [--seed S]
                                            sampling certificate for alpha

options:
  --norm N      op | s<p> | sinf | kf<k>    (default op)
  --samples K   coisometries to draw        (default 10000)
  --seed S      sampling seed               (default 0)
  --out PATH    where quasidual writes the constructed frame

environment:
  QD_TOL        overrides the comparison tolerance (default 1e-8)";

fn main() {
    std::process::exit(run());
}

struct Options {
    file: PathBuf,
    norm: UINormSpec,
    samples: usize,
    seed: u64,
    out: Option<PathBuf>,
    tol_fp: f64,
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {}", msg);
    eprintln!("{}", USAGE);
    1
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ParseError(_) | Error::DimensionMismatch(_) => 2,
        Error::InvalidSpec(_) | Error::InvalidP(_) => 1,
        _ => 3,
    }
}

fn report_error(err: &Error) -> i32 {
    eprintln!("error: {}", err);
    exit_code(err)
}

fn parse_options(args: &[String]) -> Result<Options, String> {
    if args.is_empty() {
        return Err("missing input file".into());
    }
    let mut file = None;
    let mut norm = UINormSpec::Operator;
    let mut samples = 10_000usize;
    let mut seed = 0u64;
    let mut out = None;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--norm" => {
                let v = it.next().ok_or("--norm needs a value")?;
                norm = v.parse().map_err(|e: Error| e.to_string())?;
            }
            "--samples" => {
                let v = it.next().ok_or("--samples needs a value")?;
                samples = v.parse().map_err(|_| format!("bad sample count {:?}", v))?;
                if samples == 0 {
                    return Err("--samples must be at least 1".into());
                }
            }
            "--seed" => {
                let v = it.next().ok_or("--seed needs a value")?;
                seed = v.parse().map_err(|_| format!("bad seed {:?}", v))?;
            }
            "--out" => {
                let v = it.next().ok_or("--out needs a path")?;
                out = Some(PathBuf::from(v));
            }
            other if other.starts_with("--") => {
                return Err(format!("unknown flag {:?}", other));
            }
            other => {
                if file.replace(PathBuf::from(other)).is_some() {
                    return Err("more than one input file given".into());
                }
            }
        }
    }
    let tol_fp = match env::var("QD_TOL") {
        Ok(v) => v
            .parse::<f64>()
            .ok()
            .filter(|t| t.is_finite() && *t > 0.0)
            .ok_or(format!("QD_TOL {:?} is not a positive number", v))?,
        Err(_) => DEFAULT_TOL_FP,
    };
    Ok(Options {
        file: file.ok_or("missing input file")?,
        norm,
        samples,
        seed,
        out,
        tol_fp,
    })
}

fn tolerances(tol_fp: f64) -> serde_json::Value {
    json!({
        "tol_fp": tol_fp,
        "tol_dual": TOL_DUAL,
        "tol_eig": TOL_EIG,
        "tol_cert": TOL_CERT,
    })
}

fn envelope(command: &str, opts: &Options, body: serde_json::Value) -> serde_json::Value {
    let mut report = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "input": opts.file.display().to_string(),
        "tolerances": tolerances(opts.tol_fp),
    });
    report
        .as_object_mut()
        .unwrap()
        .extend(body.as_object().cloned().unwrap());
    report
}

fn print_report(report: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(report).unwrap());
}

fn run() -> i32 {
    let args: Vec<String> = env::args().skip(1).collect();
    let Some(command) = args.first() else {
        return usage_error("missing command");
    };
    let opts = match parse_options(&args[1..]) {
        Ok(o) => o,
        Err(msg) => return usage_error(&msg),
    };
    match command.as_str() {
        "analyze" => cmd_analyze(&opts),
        "quasidual" => cmd_quasidual(&opts),
        "spectral" => cmd_spectral(&opts),
        "certify" => cmd_certify(&opts),
        other => usage_error(&format!("unknown command {:?}", other)),
    }
}

fn cmd_analyze(opts: &Options) -> i32 {
    let frame = match read_frame(&opts.file) {
        Ok(f) => f,
        Err(e) => return report_error(&e),
    };
    let bounds = frame_bounds(&frame);
    let dual = canonical_dual(&frame);
    let report = envelope(
        "analyze",
        opts,
        json!({
            "n": frame.dim(),
            "m": frame.len(),
            "excess": excess(&frame),
            "frame_bounds": { "lower": bounds.lower, "upper": bounds.upper },
            "gramian_spectrum": frame.gramian_spectrum(),
            "parseval_dual_exists": parseval_dual_exists_with_tol(&frame, opts.tol_fp),
            "canonical_dual": FrameFile::from_frame(&dual),
        }),
    );
    print_report(&report);
    0
}

fn cmd_quasidual(opts: &Options) -> i32 {
    let frame = match read_frame(&opts.file) {
        Ok(f) => f,
        Err(e) => return report_error(&e),
    };
    let built = match construct_with_tol(&frame, &opts.norm, opts.tol_fp) {
        Ok(b) => b,
        Err(e) => return report_error(&e),
    };
    let residual =
        &(frame.synthesis() * &built.x.adjoint()) - &ComplexMatrix::identity(frame.dim());
    let coisometry_residual = linalg::op_norm(
        &(&(&built.x * &built.x.adjoint()) - &ComplexMatrix::identity(frame.dim())),
    );
    let cross = optimal_spectrum_via_r(&frame.gramian_spectrum(), frame.dim()).ok();
    let x_frame = match Frame::from_synthesis(built.x.clone()) {
        Ok(f) => f,
        Err(e) => return report_error(&e),
    };
    if let Some(out) = &opts.out {
        if let Err(e) = write_frame(out, &x_frame) {
            return report_error(&e);
        }
    }
    let report = envelope(
        "quasidual",
        opts,
        json!({
            "norm": opts.norm.flag(),
            "d": built.d.d,
            "r": built.d.r,
            "alpha": built.alpha_value,
            "residual_norm": uin_norm(&opts.norm, &residual),
            "worst_case_error": linalg::op_norm(&residual),
            "coisometry_residual": coisometry_residual,
            "pivot_cross_check": cross.map(|c| json!({
                "branch": match c.branch {
                    PivotBranch::LowPivot => "low_pivot",
                    PivotBranch::HighPivot => "high_pivot",
                    PivotBranch::AllOnes => "all_ones",
                    PivotBranch::Undetermined => "undetermined",
                },
                "agrees": c.agrees,
            })),
            "quasidual": FrameFile::from_frame(&x_frame),
            "out": opts.out.as_ref().map(|p| p.display().to_string()),
        }),
    );
    print_report(&report);
    0
}

fn cmd_spectral(opts: &Options) -> i32 {
    let model = match read_model(&opts.file) {
        Ok(m) => m,
        Err(e) => return report_error(&e),
    };
    let alpha = match alpha_model(&model) {
        Ok(a) => a,
        Err(e) => return report_error(&e),
    };
    let bounds = quasidual::spectral::frame_bounds_model(&model).ok();
    let two_sided = alpha_bounds(&model).ok();
    let attain_lower = attainment_conditions(&model).ok();
    let report = envelope(
        "spectral",
        opts,
        json!({
            "excess": match model.excess() {
                Excess::Finite(n) => json!(n),
                Excess::Infinite => json!("inf"),
            },
            "frame_bounds": bounds.map(|b| json!({ "lower": b.lower, "upper": b.upper })),
            "alpha": alpha.alpha,
            "attained": alpha.attained,
            "beta": alpha.beta,
            "branch": alpha.branch,
            "alpha_bounds": two_sided.map(|(lo, hi)| json!({ "lower": lo, "upper": hi })),
            "lower_bound_attainment_conditions": attain_lower,
        }),
    );
    print_report(&report);
    0
}

fn cmd_certify(opts: &Options) -> i32 {
    let frame = match read_frame(&opts.file) {
        Ok(f) => f,
        Err(e) => return report_error(&e),
    };
    let report = certify_alpha(&frame, &opts.norm, opts.samples, opts.seed);
    let body = envelope(
        "certify",
        opts,
        json!({
            "norm": opts.norm.flag(),
            "samples": report.samples,
            "seed": report.seed,
            "alpha": report.alpha_claimed,
            "min_error_sampled": report.min_error_sampled,
            "violations": report.violations,
            "passed": report.passed(),
        }),
    );
    print_report(&body);
    if report.passed() {
        0
    } else {
        4
    }
}
