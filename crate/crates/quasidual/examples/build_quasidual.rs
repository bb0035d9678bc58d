//! Construct a Parseval quasi-dual frame and verify what makes it optimal.
//!
//! The constructed X is a coisometry, `F X*` is positive semidefinite with
//! eigenvalues `d_j^(1/2)`, and `|||F X* - I|||` hits alpha for every
//! unitarily invariant norm simultaneously.
//!
//! ```bash
//! cargo run -p quasidual --example build_quasidual
//! ```

use num_complex::Complex64;
use quasidual::frame::is_parseval;
use quasidual::linalg::{hermitian_eigen, op_norm, ComplexMatrix};
use quasidual::optimal::{construct, worst_case_error};
use quasidual::uin::{uin_norm, UINormSpec};
use quasidual::Frame;

fn main() {
    // A lopsided complex frame: five short vectors in C^2. Both optimal
    // deviations are nonzero, so alpha genuinely differs across norms.
    let f = Frame::from_vectors(&[
        vec![Complex64::new(0.5, 0.0), Complex64::new(0.0, 0.125)],
        vec![Complex64::new(0.0, -0.25), Complex64::new(0.075, 0.0)],
        vec![Complex64::new(0.125, 0.125), Complex64::new(0.25, -0.25)],
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.0625, 0.0)],
        vec![Complex64::new(0.25, 0.25), Complex64::new(0.0, 0.5)],
    ])
    .unwrap();
    println!("gramian spectrum: {:?}\n", f.gramian_spectrum());

    let built = construct(&f, &UINormSpec::Operator).unwrap();
    println!("optimal spectrum d = {:?}", built.d.d);
    println!("alpha (operator)   = {:.8}", built.alpha_value);

    // The synthesis of the quasi-dual is a coisometry.
    let coiso = op_norm(&(&(&built.x * &built.x.adjoint()) - &ComplexMatrix::identity(2)));
    println!("\n|X X* - I|  = {:.2e}", coiso);

    // F X* is positive with eigenvalues sqrt(d).
    let fx = f.synthesis() * &built.x.adjoint();
    let eig = hermitian_eigen(&fx.hermitian_part()).unwrap();
    println!("eig(F X*)   = {:?}", eig.eigenvalues);
    println!(
        "sqrt(d)     = {:?}",
        built.d.d.iter().map(|d| d.sqrt()).collect::<Vec<_>>()
    );

    // The residual meets alpha in the reported norm, and the same X is
    // optimal under the others too.
    let resid = &fx - &ComplexMatrix::identity(2);
    for spec in [
        UINormSpec::Operator,
        UINormSpec::Schatten(1.0),
        UINormSpec::Schatten(2.0),
        UINormSpec::KyFan(2),
    ] {
        println!(
            "residual under {:<4} = {:.8}  (alpha = {:.8})",
            spec.flag(),
            uin_norm(&spec, &resid),
            quasidual::optimal::alpha(&f, &spec)
        );
    }

    let x = Frame::from_synthesis(built.x.clone()).unwrap();
    println!("\nquasi-dual is Parseval: {}", is_parseval(&x));
    println!("worst-case error      : {:.8}", worst_case_error(&f, &x).unwrap());
}
