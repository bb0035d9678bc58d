//! Randomized certification of the optimal bound.
//!
//! Samples Haar-row-space coisometries, evaluates the reconstruction error
//! `|||F X* - I|||` on each, then refines locally around the best sample.
//! A passing report has no sample below the claimed alpha; this is the
//! empirical face of the simultaneous-optimality theorem.
//!
//! Every sample is derived from `(seed, sample index)` alone, so reports are
//! reproducible and independent of evaluation order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::linalg::{orthonormalize_columns, ComplexMatrix};
use crate::optimal::alpha;
use crate::uin::{uin_norm, UINormSpec};

/// Slack under the claimed alpha before a sample counts as a violation.
pub const TOL_CERT: f64 = 1e-8;

const REFINE_STEPS: usize = 50;
const REFINE_INITIAL_STEP: f64 = 0.1;

/// Outcome of a sampling run.
#[derive(Clone, Debug)]
pub struct CertificationReport {
    pub samples: usize,
    pub min_error_sampled: f64,
    pub alpha_claimed: f64,
    /// Coisometries observed strictly below `alpha_claimed - TOL_CERT`.
    pub violations: usize,
    pub seed: u64,
    pub norm: UINormSpec,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn derive_seed(seed: u64, index: u64) -> u64 {
    splitmix(seed ^ splitmix(index.wrapping_add(1)))
}

fn standard_complex_gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    // Box-Muller; u1 is pushed into (0, 1] so the log stays finite.
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let phi = 2.0 * std::f64::consts::PI * u2;
    Complex64::new(r * phi.cos(), r * phi.sin())
}

fn gaussian_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, standard_complex_gaussian(rng));
        }
    }
    m
}

/// Draws an n x m coisometry (`X X* = I`) with Haar-distributed row space:
/// a complex Gaussian matrix with orthonormalized rows. Deterministic in the
/// seed.
pub fn sample_coisometry(n: usize, m: usize, seed: u64) -> Result<ComplexMatrix> {
    if m < n {
        return Err(Error::DimensionMismatch(format!(
            "a coisometry onto C^{} needs at least {} columns, got {}",
            n, n, m
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let g = gaussian_matrix(&mut rng, n, m);
        // Orthonormalize the rows; a rank-deficient draw (probability zero)
        // just advances the stream.
        match orthonormalize_columns(&g.adjoint()) {
            Ok(q) => return Ok(q.adjoint()),
            Err(_) => continue,
        }
    }
}

fn reconstruction_error(frame: &Frame, x: &ComplexMatrix, norm: &UINormSpec) -> f64 {
    let resid = &(frame.synthesis() * &x.adjoint()) - &ComplexMatrix::identity(frame.dim());
    uin_norm(norm, &resid)
}

/// Local refinement on the coisometry manifold: additive Gaussian nudges of
/// decaying scale, re-orthonormalizing the rows after each, keeping only
/// improvements. Returns the best error found and how many evaluations fell
/// below `floor - TOL_CERT`.
pub fn refine(
    frame: &Frame,
    norm: &UINormSpec,
    start: &ComplexMatrix,
    floor: f64,
    seed: u64,
) -> (f64, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, u64::MAX));
    let mut best = start.clone();
    let mut best_err = reconstruction_error(frame, &best, norm);
    let mut violations = if best_err < floor - TOL_CERT { 1 } else { 0 };
    let mut step = REFINE_INITIAL_STEP;
    for _ in 0..REFINE_STEPS {
        let noise = gaussian_matrix(&mut rng, best.rows(), best.cols());
        let perturbed = &best + &noise.scale(step);
        let candidate = match orthonormalize_columns(&perturbed.adjoint()) {
            Ok(q) => q.adjoint(),
            Err(_) => {
                step *= 0.5;
                continue;
            }
        };
        let err = reconstruction_error(frame, &candidate, norm);
        if err < floor - TOL_CERT {
            violations += 1;
        }
        if err < best_err {
            best = candidate;
            best_err = err;
        } else {
            step *= 0.5;
        }
    }
    (best_err, violations)
}

/// Samples `samples` coisometries against the claimed alpha and refines
/// around the best one. Samples must be >= 1.
pub fn certify_alpha(
    frame: &Frame,
    norm: &UINormSpec,
    samples: usize,
    seed: u64,
) -> CertificationReport {
    assert!(samples >= 1, "certification needs at least one sample");
    let claimed = alpha(frame, norm);
    let n = frame.dim();
    let m = frame.len();

    let mut min_err = f64::INFINITY;
    let mut violations = 0usize;
    let mut best: Option<ComplexMatrix> = None;
    for k in 0..samples {
        let x = sample_coisometry(n, m, derive_seed(seed, k as u64))
            .expect("frame dimensions admit coisometries");
        let err = reconstruction_error(frame, &x, norm);
        if err < claimed - TOL_CERT {
            violations += 1;
        }
        if err < min_err {
            min_err = err;
            best = Some(x);
        }
    }

    let (refined_err, refine_violations) =
        refine(frame, norm, best.as_ref().unwrap(), claimed, seed);
    CertificationReport {
        samples,
        min_error_sampled: min_err.min(refined_err),
        alpha_claimed: claimed,
        violations: violations + refine_violations,
        seed,
        norm: *norm,
    }
}
