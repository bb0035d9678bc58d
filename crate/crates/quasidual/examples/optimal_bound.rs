//! The optimal Parseval-approximation bound alpha under several norms.
//!
//! For a frame F, alpha is the least possible `|||F X* - I|||` over all
//! Parseval frames X. It is a symmetric gauge of `(1 - d_j^(1/2))` where d
//! is the optimal compression spectrum, so one spectrum serves every norm.
//!
//! ```bash
//! cargo run -p quasidual --example optimal_bound
//! ```

use num_complex::Complex64;
use quasidual::linalg::ComplexMatrix;
use quasidual::optimal::{alpha, alpha_p, optimal_spectrum, optimal_spectrum_via_r};
use quasidual::uin::UINormSpec;
use quasidual::Frame;

fn diagonal_frame(singulars: &[f64], m: usize) -> Frame {
    let n = singulars.len();
    Frame::from_synthesis(ComplexMatrix::from_fn(n, m, |i, j| {
        if i == j {
            Complex64::new(singulars[i], 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    }))
    .unwrap()
}

fn main() {
    // Gramian spectra for the three regimes of the case split.
    let cases = [
        ("expansive  (9, 4, 0)", diagonal_frame(&[3.0, 2.0], 3)),
        ("contractive (0.25, 0.16, 0)", diagonal_frame(&[0.5, 0.4], 3)),
        ("straddling  (4, 1, 0)", diagonal_frame(&[2.0, 1.0], 3)),
    ];
    let norms = [
        ("op", UINormSpec::Operator),
        ("s1", UINormSpec::Schatten(1.0)),
        ("s2", UINormSpec::Schatten(2.0)),
        ("kf2", UINormSpec::KyFan(2)),
    ];

    for (label, frame) in &cases {
        let lambda = frame.gramian_spectrum();
        let spectrum = optimal_spectrum(&lambda, frame.dim()).unwrap();
        println!("frame with gramian spectrum {}:", label);
        println!("  optimal d = {:?}  (pivot r = {})", spectrum.d, spectrum.r);
        for (flag, spec) in &norms {
            println!("    alpha_{:<3} = {:.6}", flag, alpha(frame, spec));
        }
        // Schatten values also come from the closed p-norm formulas.
        println!(
            "    alpha_p: p=1 -> {:.6}, p=2 -> {:.6}, p=inf -> {:.6}",
            alpha_p(frame, 1.0).unwrap(),
            alpha_p(frame, 2.0).unwrap(),
            alpha_p(frame, f64::INFINITY).unwrap()
        );
        // Cross-check the deviations through the pivot-index shortcut.
        let cross = optimal_spectrum_via_r(&lambda, frame.dim()).unwrap();
        println!(
            "    pivot cross-check: branch {:?}, agrees = {}, deviations = {:?}\n",
            cross.branch, cross.agrees, cross.deviations
        );
    }
}
