//! Build a subspace on which a positive matrix compresses to a prescribed
//! spectrum.
//!
//! Feasibility is exactly the Fan-Pall inequalities
//! `lambda_i >= mu_i >= lambda_{m-n+i}`; the construction walks an explicit
//! interlacing chain, deflating one dimension per step.
//!
//! ```bash
//! cargo run -p quasidual --example prescribed_compression
//! ```

use quasidual::fanpall::{
    build_compression_subspace, check_fan_pall, deflate_once, interlace_chain, DEFAULT_TOL_FP,
};
use quasidual::linalg::{hermitian_eigen, ComplexMatrix};

fn main() {
    let lambda = [9.0, 4.0, 2.0, 1.0, 0.0];
    let mu = [3.0, 1.5];
    println!("source spectrum lambda = {:?}", lambda);
    println!("target spectrum mu     = {:?}", mu);
    println!(
        "fan-pall feasible      = {}",
        check_fan_pall(&lambda, &mu, DEFAULT_TOL_FP).unwrap()
    );

    let chain = interlace_chain(&lambda, &mu, DEFAULT_TOL_FP).unwrap();
    println!("\ninterlacing chain:");
    for level in chain.levels() {
        println!("  {:?}", level);
    }

    // One deflation step in isolation: the rational weight vector.
    let w = deflate_once(&[3.0, 2.0, 1.0], &[2.5, 1.5], DEFAULT_TOL_FP).unwrap();
    println!("\ndeflation weights for (3,2,1) -> (2.5,1.5): {:?}", w);
    println!("  sum of squares = {}", w.iter().map(|x| x * x).sum::<f64>());

    // Full construction on a dense positive matrix.
    let h = ComplexMatrix::diag(&lambda);
    let s = build_compression_subspace(&h, &mu, DEFAULT_TOL_FP).unwrap();
    let compressed = &(&s.basis.adjoint() * &h) * &s.basis;
    let eig = hermitian_eigen(&compressed.hermitian_part()).unwrap();
    println!("\ncompression spectrum on the built subspace = {:?}", eig.eigenvalues);

    // Infeasible targets are rejected up front.
    let err = check_fan_pall(&lambda, &[9.5, 1.0], DEFAULT_TOL_FP).unwrap();
    println!("target (9.5, 1.0) feasible = {}", err);
}
