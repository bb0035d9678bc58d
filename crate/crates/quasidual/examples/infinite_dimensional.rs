//! Alpha for frames of an infinite-dimensional space, on symbolic models.
//!
//! A model records the essential-spectrum interval of |F|, discrete
//! eigenvalues outside it, and the excess. Infinite excess has the closed
//! form `alpha = 1 - min(A^(1/2), 1)`; finite excess n uses
//! `min(max(u_{n+1} - 1, 1 - A^(1/2)), 1 + m_e)`.
//!
//! ```bash
//! cargo run -p quasidual --example infinite_dimensional
//! ```

use quasidual::spectral::{
    alpha_bounds, alpha_finite_excess, alpha_infinite_excess, attainment_conditions,
    frame_bounds_model, l_n, rogers_distance, u_n, Excess, FredholmIndex, SpectralModel,
};

fn main() {
    // Infinite excess, lower bound 0.25: alpha = 1 - 0.5.
    let lush = SpectralModel::new((0.5, 1.0), vec![], vec![], Excess::Infinite, false).unwrap();
    let report = alpha_infinite_excess(&lush).unwrap();
    let bounds = frame_bounds_model(&lush).unwrap();
    println!("infinite excess, A_F = {}:", bounds.lower);
    println!(
        "  alpha = {}, beta = {:?}, attained = {:?}",
        report.alpha, report.beta, report.attained
    );
    println!(
        "  two-sided bounds = {:?}, lower-bound attainment conditions = {}",
        alpha_bounds(&lush).unwrap(),
        attainment_conditions(&lush).unwrap()
    );

    // Finite excess 1 with outliers above the essential interval [1, 2].
    let spiky = SpectralModel::new(
        (1.0, 2.0),
        vec![(3.0, 1), (2.5, 1)],
        vec![(0.0, 1)],
        Excess::Finite(1),
        false,
    )
    .unwrap();
    println!("\nfinite excess 1, ess = [1, 2], outliers 3 and 2.5:");
    println!("  u_2 = {}, l_2 = {}", u_n(&spiky, 2).unwrap(), l_n(&spiky, 2).unwrap());
    let report = alpha_finite_excess(&spiky).unwrap();
    println!(
        "  alpha = {} (branch {:?}), attained = {:?}",
        report.alpha, report.branch, report.attained
    );

    // Everything clustered at a small essential point: the cap binds the
    // lower deviation.
    let squeezed =
        SpectralModel::new((0.2, 0.2), vec![], vec![(0.0, 2)], Excess::Finite(2), false).unwrap();
    let report = alpha_finite_excess(&squeezed).unwrap();
    println!("\nfinite excess 2, spectrum pinned at 0.2:");
    println!("  alpha = {}, beta = {:?}", report.alpha, report.beta);

    // Rogers distances to the unitary group.
    println!("\ndistance to the unitaries:");
    println!(
        "  ||T|| = 3, m(T) = 0.5, ind 0   -> {}",
        rogers_distance(3.0, 0.5, 0.5, FredholmIndex::Finite(0)).unwrap()
    );
    println!(
        "  ||T|| = 1, m(T) = 1, ind 0     -> {}  (already unitary)",
        rogers_distance(1.0, 1.0, 1.0, FredholmIndex::Finite(0)).unwrap()
    );
    println!(
        "  ||T|| = 1.5, m_e = 0.3, ind -1 -> {}",
        rogers_distance(1.5, 0.1, 0.3, FredholmIndex::Finite(-1)).unwrap()
    );
}
