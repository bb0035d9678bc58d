//! Build frames, inspect their bounds and spectrum, and work with duals.
//!
//! ```bash
//! cargo run -p quasidual --example frame_basics
//! ```

use num_complex::Complex64;
use quasidual::frame::{canonical_dual, excess, frame_bounds, is_dual_pair, is_parseval, Frame};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() {
    // Three equiangular unit vectors in R^2: the classic tight frame.
    let mercedes = Frame::from_vectors(&[
        vec![c(1.0, 0.0), c(0.0, 0.0)],
        vec![c(-0.5, 0.0), c(3f64.sqrt() / 2.0, 0.0)],
        vec![c(-0.5, 0.0), c(-3f64.sqrt() / 2.0, 0.0)],
    ])
    .unwrap();

    let bounds = frame_bounds(&mercedes);
    println!("mercedes frame: n = {}, m = {}", mercedes.dim(), mercedes.len());
    println!("  excess          = {}", excess(&mercedes));
    println!("  frame bounds    = ({:.4}, {:.4})  (tight)", bounds.lower, bounds.upper);
    println!("  gramian spectrum = {:?}", mercedes.gramian_spectrum());
    println!("  parseval?       = {}", is_parseval(&mercedes));

    // The canonical dual frame reconstructs perfectly.
    let dual = canonical_dual(&mercedes);
    println!("\ncanonical dual vectors:");
    for i in 0..dual.len() {
        let v = dual.vector(i);
        println!("  g_{} = ({:+.4}, {:+.4})", i, v[0].re, v[1].re);
    }
    println!("  (F, F#) dual pair? = {}", is_dual_pair(&mercedes, &dual).unwrap());

    // A genuinely complex frame with a zero member (legal: the frame
    // condition ignores it).
    let complex_frame = Frame::from_vectors(&[
        vec![c(1.0, 0.5), c(0.0, -1.0)],
        vec![c(0.0, 0.3), c(2.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 0.0)],
    ])
    .unwrap();
    let b = frame_bounds(&complex_frame);
    println!("\ncomplex frame with a zero member:");
    println!("  bounds = ({:.4}, {:.4}), excess = {}", b.lower, b.upper, excess(&complex_frame));

    // Rank-deficient families are rejected.
    let err = Frame::from_vectors(&[
        vec![c(1.0, 0.0), c(0.0, 0.0)],
        vec![c(2.0, 0.0), c(0.0, 0.0)],
    ])
    .unwrap_err();
    println!("\nrejected family: {}", err);
}
