//! Shared helpers for integration tests: seeded random matrices, unitaries,
//! frames, and frames with a prescribed frame-operator spectrum.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quasidual::frame::Frame;
use quasidual::linalg::{orthonormalize_columns, ComplexMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let phi = 2.0 * std::f64::consts::PI * u2;
    Complex64::new(r * phi.cos(), r * phi.sin())
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

pub fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    loop {
        if let Ok(q) = orthonormalize_columns(&random_matrix(rng, n, n)) {
            return q;
        }
    }
}

pub fn random_frame(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Frame {
    loop {
        if let Ok(f) = Frame::from_synthesis(random_matrix(rng, n, m)) {
            return f;
        }
    }
}

/// Frame whose frame operator has the prescribed spectrum (length n), padded
/// with excess zeros in the Gramian: `F = U [diag(sqrt(spec)) 0] W*`.
pub fn frame_with_spectrum(rng: &mut ChaCha8Rng, spectrum: &[f64], m: usize) -> Frame {
    let n = spectrum.len();
    assert!(m >= n);
    let u = random_unitary(rng, n);
    let w = random_unitary(rng, m);
    let core = ComplexMatrix::from_fn(n, m, |i, j| {
        if i == j {
            Complex64::new(spectrum[i].sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Frame::from_synthesis(&(&u * &core) * &w.adjoint()).expect("prescribed spectrum is a frame")
}

/// Random positive Hermitian matrix with independent uniform eigenvalues.
pub fn random_positive(rng: &mut ChaCha8Rng, m: usize, max_eig: f64) -> ComplexMatrix {
    let u = random_unitary(rng, m);
    let eigs: Vec<f64> = (0..m).map(|_| rng.gen::<f64>() * max_eig).collect();
    (&(&u * &ComplexMatrix::diag(&eigs)) * &u.adjoint()).hermitian_part()
}
