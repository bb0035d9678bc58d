//! When does a frame have a genuine Parseval dual, and what does its
//! dilation look like?
//!
//! Existence needs `lambda_min(S_F) >= 1` and eigenvalue 1 with multiplicity
//! at least 2n - m. When it holds, the frame is the image of an orthonormal
//! basis under an oblique projection Q.
//!
//! ```bash
//! cargo run -p quasidual --example parseval_dual_dilation
//! ```

use num_complex::Complex64;
use quasidual::linalg::{op_norm, ComplexMatrix};
use quasidual::optimal::{alpha, dilation, parseval_dual_exists};
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
    let cases = [
        ("S_F spectrum (4, 1), m = 3", diagonal_frame(&[2.0, 1.0], 3)),
        ("S_F spectrum (9, 4), m = 3", diagonal_frame(&[3.0, 2.0], 3)),
        ("S_F spectrum (4, 2), m = 4", diagonal_frame(&[2.0, 2f64.sqrt()], 4)),
        ("S_F spectrum (1, 0.81), m = 4", diagonal_frame(&[1.0, 0.9], 4)),
    ];
    for (label, f) in &cases {
        let exists = parseval_dual_exists(f);
        let a = alpha(f, &UINormSpec::Operator);
        println!("{}: parseval dual exists = {}, alpha = {:.6}", label, exists, a);
    }

    // Dilation of a frame that admits a Parseval dual.
    let f = diagonal_frame(&[2.0, 1.0], 3);
    let (q, embedding) = dilation(&f).unwrap();
    println!("\ndilation of the first frame:");
    println!("  Q is {}x{}", q.rows(), q.cols());
    println!("  |Q^2 - Q|      = {:.2e}  (idempotent)", op_norm(&(&(&q * &q) - &q)));
    println!(
        "  |Q - Q*|_F     = {:.2e}  (oblique: generally not Hermitian)",
        q.hermitian_residual()
    );
    let iso = &embedding.adjoint() * &embedding;
    println!(
        "  embedding isometry residual = {:.2e}",
        op_norm(&(&iso - &ComplexMatrix::identity(2)))
    );
    // Q fixes the embedded copy of C^2 pointwise: projecting the basis of
    // the big space recovers exactly the embedded frame vectors.
    let fixed = &(&q * &embedding) - &embedding;
    println!("  |Q X* - X*|    = {:.2e}  (Q is the identity on R(X*))", fixed.frobenius_norm());
}
