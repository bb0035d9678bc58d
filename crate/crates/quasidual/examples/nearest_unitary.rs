//! Polar decomposition and the nearest-unitary bracketing.
//!
//! For any square A with polar factor U, every unitary W satisfies
//! `|||A - U||| <= |||A - W||| <= |||A + U|||` in every unitarily invariant
//! norm. This is the Procrustes fact the quasi-dual construction leans on.
//!
//! ```bash
//! cargo run -p quasidual --example nearest_unitary
//! ```

use num_complex::Complex64;
use quasidual::certify::sample_coisometry;
use quasidual::linalg::{polar, ComplexMatrix};
use quasidual::uin::{uin_norm, UINormSpec};

fn main() {
    let a = ComplexMatrix::from_rows(&[
        vec![Complex64::new(1.2, 0.4), Complex64::new(-0.3, 0.9), Complex64::new(0.0, 0.2)],
        vec![Complex64::new(0.5, 0.0), Complex64::new(2.0, -0.5), Complex64::new(0.7, 0.0)],
        vec![Complex64::new(0.0, -0.8), Complex64::new(0.1, 0.1), Complex64::new(0.6, 1.5)],
    ])
    .unwrap();

    let (u, p) = polar(&a).unwrap();
    println!("polar: A = U P");
    println!("  |A - U P|_F residual = {:.2e}", (&a - &(&u * &p)).frobenius_norm());
    println!("  U unitary residual   = {:.2e}", {
        let r = &(&u.adjoint() * &u) - &ComplexMatrix::identity(3);
        r.frobenius_norm()
    });

    let near = &a - &u;
    let far = &a + &u;
    let norms = [
        UINormSpec::Operator,
        UINormSpec::Schatten(1.0),
        UINormSpec::Schatten(2.0),
        UINormSpec::KyFan(2),
    ];

    println!("\nbracketing against 5 random unitaries:");
    for spec in &norms {
        let lo = uin_norm(spec, &near);
        let hi = uin_norm(spec, &far);
        print!("  {:<4}  |A-U| = {:.4}  samples:", spec.flag(), lo);
        for seed in 0..5 {
            let w = sample_coisometry(3, 3, seed).unwrap();
            print!(" {:.4}", uin_norm(spec, &(&a - &w)));
        }
        println!("  |A+U| = {:.4}", hi);
    }
    println!("\nevery sampled distance lies inside [|A-U|, |A+U|].");
}
