//! Certify alpha empirically: sample thousands of coisometries and check
//! that none reconstructs better than the claimed optimum.
//!
//! ```bash
//! cargo run -p quasidual --example certify_bound --release
//! ```

use num_complex::Complex64;
use quasidual::certify::{certify_alpha, refine, sample_coisometry};
use quasidual::linalg::ComplexMatrix;
use quasidual::optimal::construct;
use quasidual::uin::UINormSpec;
use quasidual::Frame;

fn main() {
    // Gramian spectrum (9, 4, 0): alpha under the operator norm is exactly 1.
    let f = Frame::from_synthesis(ComplexMatrix::from_fn(2, 3, |i, j| {
        if i == j {
            Complex64::new(3.0 - i as f64, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
    .unwrap();

    for norm in [UINormSpec::Operator, UINormSpec::Schatten(1.0)] {
        let report = certify_alpha(&f, &norm, 5000, 42);
        println!(
            "norm {:<3}: alpha = {:.6}, sampled minimum = {:.6}, violations = {}, passed = {}",
            norm.flag(),
            report.alpha_claimed,
            report.min_error_sampled,
            report.violations,
            report.passed()
        );
    }

    // Refinement started at the constructed optimum stays there.
    let norm = UINormSpec::Operator;
    let built = construct(&f, &norm).unwrap();
    let (refined, violations) = refine(&f, &norm, &built.x, built.alpha_value, 42);
    println!(
        "\nrefined from the constructed X: error = {:.10} (alpha = {:.10}), violations = {}",
        refined, built.alpha_value, violations
    );

    // Sampling is reproducible: same seed, same coisometry.
    let a = sample_coisometry(2, 3, 7).unwrap();
    let b = sample_coisometry(2, 3, 7).unwrap();
    println!("\nseeded sampling is deterministic: {}", (&a - &b).max_abs() == 0.0);
}
