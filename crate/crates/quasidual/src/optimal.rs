//! Optimal Parseval approximation of a frame.
//!
//! For a frame F with Gramian spectrum `lambda` (length m, non-increasing),
//! the optimal spectrum `d` picks, entrywise, the point of the Fan-Pall box
//! `[lambda_{m-n+j}, lambda_j]` closest to 1:
//!
//! ```text
//! d_j = lambda_{m-n+j}   if lambda_{m-n+j} >= 1
//!       1                if lambda_{m-n+j} < 1 <= lambda_j
//!       lambda_j         if lambda_j < 1
//! ```
//!
//! The minimum of `|||F X* - I|||` over all coisometries X equals
//! `gauge((1 - d_j^(1/2))_j)` for every unitarily invariant norm at once, and
//! a minimizer is reached constructively: compress the Gramian to a subspace
//! S with spectrum `d`, then take the coisometric polar factor of `P_S F*`.

use crate::error::{Error, Result};
use crate::fanpall::{build_compression_subspace, SubspaceBasis, DEFAULT_TOL_FP};
use crate::frame::{is_parseval, Frame};
use crate::linalg::{self, hermitian_eigen, polar, ComplexMatrix};
use crate::uin::{gauge, uin_norm, UINormSpec};

/// Absolute tolerance for counting the multiplicity of eigenvalue 1 of the
/// frame operator; the Parseval-dual predicate is discontinuous there.
pub const TOL_EIGENVALUE_ONE: f64 = 1e-8;

/// The optimal compression spectrum `d` for a frame, plus the pivot index r.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimalSpectrum {
    /// Target eigenvalues of `|F X*|^2`, length n, non-increasing, positive.
    pub d: Vec<f64>,
    /// Largest index (1-based, capped at n) with `lambda_r >= 1`; 0 if none.
    pub r: usize,
}

/// Case split evaluated without rank validation; `lambda` non-increasing.
fn compute_d(lambda: &[f64], n: usize) -> Vec<f64> {
    let m = lambda.len();
    (0..n)
        .map(|j| {
            let lo = lambda[m - n + j];
            let hi = lambda[j];
            if lo >= 1.0 {
                lo
            } else if hi >= 1.0 {
                1.0
            } else {
                hi
            }
        })
        .collect()
}

fn pivot_index(lambda: &[f64], n: usize) -> usize {
    (0..n).rev().find(|&j| lambda[j] >= 1.0).map_or(0, |j| j + 1)
}

/// Optimal spectrum for a Gramian spectrum `lambda` of an (n, m) frame.
pub fn optimal_spectrum(lambda: &[f64], n: usize) -> Result<OptimalSpectrum> {
    let m = lambda.len();
    if n < 1 || n > m {
        return Err(Error::DimensionMismatch(format!(
            "need 1 <= n <= m, got n = {}, m = {}",
            n, m
        )));
    }
    if lambda
        .windows(2)
        .any(|w| w[1] > w[0] + 1e-12 * w[0].abs().max(1.0))
    {
        return Err(Error::NotSorted("Gramian spectrum".into()));
    }
    let tol_rank = m as f64 * f64::EPSILON * lambda[0].max(0.0);
    if lambda[n - 1] <= tol_rank {
        return Err(Error::RankTooLow(format!(
            "lambda_n = {:.3e} is numerically zero",
            lambda[n - 1]
        )));
    }
    Ok(OptimalSpectrum {
        d: compute_d(lambda, n),
        r: pivot_index(lambda, n),
    })
}

/// Which branch of the pivot-index deviation formula applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotBranch {
    /// `r <= m-n+1` and `r < n`: deviations `(1 - lambda_j^(1/2))` for j > r.
    LowPivot,
    /// `r > m-n+1`: deviations `|lambda_j^(1/2) - 1|` for j >= m-n+1.
    HighPivot,
    /// `r = n` and `m-n+1 > n`: every `d_j = 1`, no deviations.
    AllOnes,
    /// The case split covers no branch (boundary `r = n = m-n+1`).
    Undetermined,
}

/// Result of cross-checking the pivot-index formula against the case split.
#[derive(Clone, Debug)]
pub struct DeviationCrossCheck {
    /// Nonzero values of `|1 - d_j^(1/2)|`, sorted non-increasing. When the
    /// pivot formula does not apply or disagrees, these come from `d`.
    pub deviations: Vec<f64>,
    pub branch: PivotBranch,
    /// What the pivot-branch formula yields, when a branch applies.
    pub branch_deviations: Option<Vec<f64>>,
    /// False when a branch applied but produced a different multiset.
    pub agrees: bool,
}

fn nonzero_sorted(mut vals: Vec<f64>) -> Vec<f64> {
    vals.retain(|&x| x.abs() > 1e-14);
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    vals
}

/// The nonzero deviations `|1 - d_j^(1/2)|` computed through the pivot index
/// r instead of the full case split, cross-validated against
/// [`optimal_spectrum`]. The boundary `r = n = m-n+1` is not covered by the
/// pivot formula; there the result falls back to the case-split values and
/// reports `Undetermined`.
pub fn optimal_spectrum_via_r(lambda: &[f64], n: usize) -> Result<DeviationCrossCheck> {
    let spectrum = optimal_spectrum(lambda, n)?;
    let m = lambda.len();
    let r = spectrum.r;
    let reference = nonzero_sorted(
        spectrum
            .d
            .iter()
            .map(|dj| (1.0 - dj.sqrt()).abs())
            .collect(),
    );

    let (branch, branch_vals) = if r <= m - n + 1 && r < n {
        let vals: Vec<f64> = (r..n).map(|j| 1.0 - lambda[j].sqrt()).collect();
        (PivotBranch::LowPivot, Some(nonzero_sorted(vals)))
    } else if r > m - n + 1 {
        let vals: Vec<f64> = (m - n..n).map(|j| (lambda[j].sqrt() - 1.0).abs()).collect();
        (PivotBranch::HighPivot, Some(nonzero_sorted(vals)))
    } else if r == n && m - n + 1 > n {
        (PivotBranch::AllOnes, Some(Vec::new()))
    } else {
        (PivotBranch::Undetermined, None)
    };

    let agrees = match &branch_vals {
        Some(vals) => {
            vals.len() == reference.len()
                && vals
                    .iter()
                    .zip(reference.iter())
                    .all(|(a, b)| (a - b).abs() <= 1e-12)
        }
        None => true,
    };
    Ok(DeviationCrossCheck {
        deviations: reference,
        branch,
        branch_deviations: branch_vals,
        agrees,
    })
}

/// The optimal bound: `gauge((1 - d_j^(1/2))_j)` for the given norm.
/// Zero exactly when the frame admits a Parseval dual.
pub fn alpha(frame: &Frame, norm: &UINormSpec) -> f64 {
    let lambda = frame.gramian_spectrum();
    let d = compute_d(&lambda, frame.dim());
    let deviations: Vec<f64> = d.iter().map(|dj| 1.0 - dj.sqrt()).collect();
    gauge(norm, &deviations).expect("finite deviations")
}

/// Schatten-p specialization of `alpha`. For `p = inf` this evaluates the
/// closed form `max(1 - lambda_n^(1/2), lambda_{m-n+1}^(1/2) - 1, 0)`
/// directly from the Gramian spectrum.
pub fn alpha_p(frame: &Frame, p: f64) -> Result<f64> {
    if p < 1.0 || p.is_nan() {
        return Err(Error::InvalidP(format!("p = {} is not in [1, inf]", p)));
    }
    let lambda = frame.gramian_spectrum();
    let n = frame.dim();
    let m = frame.len();
    if p.is_infinite() {
        let from_small = 1.0 - lambda[n - 1].sqrt();
        let from_large = lambda[m - n].sqrt() - 1.0;
        return Ok(from_small.max(from_large).max(0.0));
    }
    let d = compute_d(&lambda, n);
    let sum: f64 = d.iter().map(|dj| (1.0 - dj.sqrt()).abs().powf(p)).sum();
    Ok(sum.powf(1.0 / p))
}

/// A constructed Parseval quasi-dual.
#[derive(Clone, Debug)]
pub struct QuasiDualResult {
    /// Synthesis matrix of the quasi-dual, n x m, coisometric.
    pub x: ComplexMatrix,
    /// The subspace S = R(X*) of C^m the construction compressed to.
    pub subspace: SubspaceBasis,
    /// The optimal spectrum this construction realizes.
    pub d: OptimalSpectrum,
    /// `alpha` of the frame under `norm`.
    pub alpha_value: f64,
    /// Norm used to fill `alpha_value`.
    pub norm: UINormSpec,
}

/// Builds a Parseval quasi-dual of `frame`, optimal for every unitarily
/// invariant norm simultaneously; `norm` only selects which alpha value is
/// reported. Deterministic: the deflation-chain subspace is used as S.
pub fn construct(frame: &Frame, norm: &UINormSpec) -> Result<QuasiDualResult> {
    construct_with_tol(frame, norm, DEFAULT_TOL_FP)
}

/// As [`construct`], with an explicit Fan-Pall comparison tolerance.
pub fn construct_with_tol(frame: &Frame, norm: &UINormSpec, tol: f64) -> Result<QuasiDualResult> {
    let lambda = frame.gramian_spectrum();
    let n = frame.dim();
    let d = OptimalSpectrum {
        d: compute_d(&lambda, n),
        r: pivot_index(&lambda, n),
    };
    // Feasibility of d against lambda holds by its case analysis, so a
    // Fan-Pall rejection here can only mean an internal inconsistency.
    let subspace = build_compression_subspace(&frame.gramian(), &d.d, tol)?;
    let projection = subspace.projection();
    let compressed_analysis = &projection * &frame.synthesis().adjoint();
    let (v, _) = polar(&compressed_analysis)?;
    let x = &v.adjoint() * &projection;
    let alpha_value = alpha(frame, norm);
    Ok(QuasiDualResult {
        x,
        subspace,
        d,
        alpha_value,
        norm: *norm,
    })
}

/// True iff the frame admits a Parseval dual: the smallest frame-operator
/// eigenvalue is >= 1 and eigenvalue 1 has multiplicity at least 2n - m.
pub fn parseval_dual_exists(frame: &Frame) -> bool {
    parseval_dual_exists_with_tol(frame, DEFAULT_TOL_FP)
}

/// As [`parseval_dual_exists`] with an explicit slack on `lambda_min >= 1`.
pub fn parseval_dual_exists_with_tol(frame: &Frame, tol: f64) -> bool {
    let eig = hermitian_eigen(&frame.frame_operator()).expect("frame operator is Hermitian");
    let lam_min = *eig.eigenvalues.last().unwrap();
    if lam_min < 1.0 - tol {
        return false;
    }
    let needed = 2 * frame.dim() as isize - frame.len() as isize;
    if needed <= 0 {
        return true;
    }
    let mult_one = eig
        .eigenvalues
        .iter()
        .filter(|&&l| (l - 1.0).abs() <= TOL_EIGENVALUE_ONE)
        .count();
    needed as usize <= mult_one
}

/// Dilation of a frame admitting a Parseval dual: an oblique projection
/// `Q = X* F` on C^m and the isometric embedding `X*` of C^n into C^m, with
/// `Q e_i` the embedded image of the i-th frame vector.
pub fn dilation(frame: &Frame) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if !parseval_dual_exists(frame) {
        return Err(Error::NoParsevalDual(format!(
            "frame with bounds {:?} has no Parseval dual",
            crate::frame::frame_bounds(frame)
        )));
    }
    let built = construct(frame, &UINormSpec::Operator)?;
    let embedding = built.x.adjoint();
    let q = &embedding * frame.synthesis();
    Ok((q, embedding))
}

/// True iff the Parseval frame `x` attains the optimal bound for `norm`.
pub fn is_quasidual(frame: &Frame, x: &Frame, norm: &UINormSpec) -> Result<bool> {
    if frame.dim() != x.dim() || frame.len() != x.len() {
        return Err(Error::DimensionMismatch(format!(
            "frame is {}x{}, candidate is {}x{}",
            frame.dim(),
            frame.len(),
            x.dim(),
            x.len()
        )));
    }
    if !is_parseval(x) {
        return Err(Error::NotParseval(
            "candidate synthesis is not a coisometry".into(),
        ));
    }
    let resid = &(frame.synthesis() * &x.synthesis().adjoint()) - &ComplexMatrix::identity(frame.dim());
    Ok(uin_norm(norm, &resid) <= alpha(frame, norm) + DEFAULT_TOL_FP)
}

/// Worst-case reconstruction error of analyzing with `x` and synthesizing
/// with `frame`: the operator norm of `F X* - I`.
pub fn worst_case_error(frame: &Frame, x: &Frame) -> Result<f64> {
    if frame.dim() != x.dim() || frame.len() != x.len() {
        return Err(Error::DimensionMismatch(format!(
            "frame is {}x{}, candidate is {}x{}",
            frame.dim(),
            frame.len(),
            x.dim(),
            x.len()
        )));
    }
    let resid = &(frame.synthesis() * &x.synthesis().adjoint()) - &ComplexMatrix::identity(frame.dim());
    Ok(linalg::op_norm(&resid))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::orthonormalize_columns;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Frame whose Gramian spectrum is the squares of `singulars`, padded
    /// with zeros to m columns: diagonal synthesis plus zero vectors.
    fn frame_with_singulars(singulars: &[f64], m: usize) -> Frame {
        let n = singulars.len();
        let synth = ComplexMatrix::from_fn(n, m, |i, j| {
            if i == j {
                c(singulars[i], 0.0)
            } else {
                c(0.0, 0.0)
            }
        });
        Frame::from_synthesis(synth).unwrap()
    }

    fn onb(n: usize) -> Frame {
        Frame::from_synthesis(ComplexMatrix::identity(n)).unwrap()
    }

    #[test]
    fn optimal_spectrum_case_split() {
        let s = optimal_spectrum(&[4.0, 1.0, 0.0], 2).unwrap();
        assert_eq!(s.d, vec![1.0, 1.0]);
        assert_eq!(s.r, 2);
        let s = optimal_spectrum(&[0.25, 0.16, 0.0], 2).unwrap();
        assert_eq!(s.d, vec![0.25, 0.16]);
        assert_eq!(s.r, 0);
        let s = optimal_spectrum(&[9.0, 4.0, 0.0], 2).unwrap();
        assert_eq!(s.d, vec![4.0, 1.0]);
        assert_eq!(s.r, 2);
    }

    #[test]
    fn optimal_spectrum_stays_in_fan_pall_box() {
        let lambda = [7.5, 3.0, 1.0, 0.4, 0.0, 0.0];
        let n = 3;
        let s = optimal_spectrum(&lambda, n).unwrap();
        let m = lambda.len();
        for j in 0..n {
            assert!(lambda[j] >= s.d[j] && s.d[j] >= lambda[m - n + j]);
        }
    }

    #[test]
    fn optimal_spectrum_rejects_bad_input() {
        assert!(matches!(
            optimal_spectrum(&[1.0, 2.0, 0.0], 2),
            Err(Error::NotSorted(_))
        ));
        assert!(matches!(
            optimal_spectrum(&[1.0, 0.0, 0.0], 2),
            Err(Error::RankTooLow(_))
        ));
    }

    #[test]
    fn pivot_formula_low_branch() {
        let check = optimal_spectrum_via_r(&[0.25, 0.16, 0.0], 2).unwrap();
        assert_eq!(check.branch, PivotBranch::LowPivot);
        assert!(check.agrees);
        assert_eq!(check.deviations.len(), 2);
        assert!((check.deviations[0] - 0.6).abs() < 1e-12);
        assert!((check.deviations[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn pivot_formula_boundary_falls_back() {
        // r = n = m-n+1: the published case split covers neither branch.
        let check = optimal_spectrum_via_r(&[9.0, 4.0, 0.0], 2).unwrap();
        assert_eq!(check.branch, PivotBranch::Undetermined);
        assert!(check.agrees);
        assert_eq!(check.deviations, vec![1.0]);
    }

    #[test]
    fn pivot_formula_all_ones() {
        let check = optimal_spectrum_via_r(&[4.0, 1.0, 0.0], 2).unwrap();
        assert!(check.deviations.is_empty());
    }

    #[test]
    fn pivot_formula_reports_disagreement_at_low_edge() {
        // r = m-n+1 with lambda_r > 1: the low branch applies by its
        // condition but misses the deviation of d_1 = lambda_{m-n+1}. The
        // cross-check keeps the case-split values and flags the mismatch.
        let check = optimal_spectrum_via_r(&[4.0, 4.0, 0.25, 0.0], 3).unwrap();
        assert_eq!(check.branch, PivotBranch::LowPivot);
        assert!(!check.agrees);
        assert_eq!(check.deviations, vec![1.0, 0.5]);
        assert_eq!(check.branch_deviations, Some(vec![0.5]));
    }

    #[test]
    fn pivot_formula_high_branch() {
        // m = 5, n = 2: m-n+1 = 4 is past n, so r must exceed it... not
        // reachable with r <= n; use m = 3, n = 2 with r = 2 > m-n+1 = 2
        // impossible as well. High branch needs m - n + 1 < r <= n.
        let check = optimal_spectrum_via_r(&[9.0, 4.0, 2.25, 0.0], 3).unwrap();
        // m = 4, n = 3: m-n+1 = 2, r = 3 > 2.
        assert_eq!(check.branch, PivotBranch::HighPivot);
        assert!(check.agrees, "{:?}", check);
        assert_eq!(check.deviations, vec![1.0, 0.5]);
    }

    #[test]
    fn alpha_of_orthonormal_basis_is_zero() {
        let f = onb(3);
        for norm in [
            UINormSpec::Operator,
            UINormSpec::Schatten(1.0),
            UINormSpec::Schatten(2.0),
            UINormSpec::KyFan(2),
        ] {
            assert!(alpha(&f, &norm).abs() < 1e-12);
        }
    }

    #[test]
    fn alpha_hand_evaluations() {
        let f = frame_with_singulars(&[0.5, 0.4], 3);
        assert!((alpha(&f, &UINormSpec::Schatten(f64::INFINITY)) - 0.6).abs() < 1e-12);
        assert!((alpha(&f, &UINormSpec::Schatten(1.0)) - 1.1).abs() < 1e-12);
        let g = frame_with_singulars(&[3.0, 2.0], 3);
        assert!((alpha(&g, &UINormSpec::Schatten(f64::INFINITY)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn alpha_p_matches_alpha() {
        let f = frame_with_singulars(&[0.5, 0.4], 3);
        assert!((alpha_p(&f, 2.0).unwrap() - 0.61f64.sqrt()).abs() < 1e-12);
        for p in [1.0, 2.0, 3.5] {
            let via_gauge = alpha(&f, &UINormSpec::Schatten(p));
            assert!((alpha_p(&f, p).unwrap() - via_gauge).abs() < 1e-12);
        }
        let g = frame_with_singulars(&[3.0, 2.0], 3);
        assert!((alpha_p(&g, f64::INFINITY).unwrap() - 1.0).abs() < 1e-12);
        assert!(alpha_p(&f, 0.5).is_err());
        let parseval = onb(2);
        assert!(alpha_p(&parseval, 7.0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn construct_on_orthonormal_basis() {
        let f = onb(2);
        let built = construct(&f, &UINormSpec::Operator).unwrap();
        let fx = f.synthesis() * &built.x.adjoint();
        assert!((&fx - &ComplexMatrix::identity(2)).frobenius_norm() < 1e-10);
    }

    #[test]
    fn construct_reaches_parseval_dual_when_one_exists() {
        let f = frame_with_singulars(&[2.0, 1.0], 3);
        let built = construct(&f, &UINormSpec::Operator).unwrap();
        let fx = f.synthesis() * &built.x.adjoint();
        assert!((&fx - &ComplexMatrix::identity(2)).frobenius_norm() < 1e-9);
        let xx = &built.x * &built.x.adjoint();
        assert!((&xx - &ComplexMatrix::identity(2)).frobenius_norm() < 1e-11);
        assert!(built.alpha_value.abs() < 1e-12);
    }

    #[test]
    fn construct_on_stretched_frame() {
        let f = frame_with_singulars(&[3.0, 2.0], 3);
        let built = construct(&f, &UINormSpec::Operator).unwrap();
        let fx = f.synthesis() * &built.x.adjoint();
        let eig = hermitian_eigen(&fx.hermitian_part()).unwrap();
        assert!((eig.eigenvalues[0] - 2.0).abs() < 1e-9);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-9);
        let err = worst_case_error(&f, &Frame::from_synthesis(built.x.clone()).unwrap()).unwrap();
        assert!((err - 1.0).abs() < 1e-9);
    }

    #[test]
    fn parseval_dual_existence_examples() {
        assert!(parseval_dual_exists(&onb(2)));
        assert!(parseval_dual_exists(&frame_with_singulars(&[2.0, 1.0], 3)));
        assert!(!parseval_dual_exists(&frame_with_singulars(&[3.0, 2.0], 3)));
    }

    #[test]
    fn existence_matches_alpha_zero() {
        let fixtures = [
            frame_with_singulars(&[2.0, 1.0], 3),
            frame_with_singulars(&[3.0, 2.0], 3),
            frame_with_singulars(&[1.0, 1.0], 2),
            frame_with_singulars(&[0.5, 0.4], 3),
            frame_with_singulars(&[1.5, 1.2, 1.0], 6),
        ];
        for f in &fixtures {
            let exists = parseval_dual_exists(f);
            let a = alpha(f, &UINormSpec::Operator);
            assert_eq!(exists, a <= 1e-8, "alpha = {}", a);
        }
    }

    #[test]
    fn dilation_of_orthonormal_basis() {
        let (q, embedding) = dilation(&onb(2)).unwrap();
        assert!((&q - &ComplexMatrix::identity(2)).frobenius_norm() < 1e-10);
        let ee = &embedding.adjoint() * &embedding;
        assert!((&ee - &ComplexMatrix::identity(2)).frobenius_norm() < 1e-11);
    }

    #[test]
    fn dilation_produces_idempotent_lifting() {
        let f = frame_with_singulars(&[2.0, 1.0], 3);
        let (q, embedding) = dilation(&f).unwrap();
        assert!((&(&q * &q) - &q).frobenius_norm() < 1e-9);
        // Q fixes the embedded copy of C^n pointwise (this needs F X* = I).
        let fixed = &q * &embedding;
        assert!((&fixed - &embedding).frobenius_norm() < 1e-9);
        // Rank of the projection is n, not m.
        let s = linalg::singular_values(&q);
        let tol = linalg::rank_tolerance(&q, &s);
        assert_eq!(s.iter().filter(|&&x| x > tol).count(), 2);
    }

    #[test]
    fn dilation_of_parseval_frame_is_orthogonal_projection() {
        let s = 1.0 / 2f64.sqrt();
        let f = Frame::from_vectors(&[
            vec![c(s, 0.0), c(0.0, 0.0)],
            vec![c(s, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0)],
        ])
        .unwrap();
        let (q, _) = dilation(&f).unwrap();
        assert!((&(&q * &q) - &q).frobenius_norm() < 1e-9);
        assert!(q.hermitian_residual() < 1e-9);
    }

    #[test]
    fn dilation_requires_existence() {
        assert!(matches!(
            dilation(&frame_with_singulars(&[3.0, 2.0], 3)),
            Err(Error::NoParsevalDual(_))
        ));
    }

    #[test]
    fn quasidual_membership() {
        let f = frame_with_singulars(&[3.0, 2.0], 3);
        let built = construct(&f, &UINormSpec::Schatten(2.0)).unwrap();
        let x = Frame::from_synthesis(built.x.clone()).unwrap();
        assert!(is_quasidual(&f, &x, &UINormSpec::Schatten(2.0)).unwrap());
        assert!(is_quasidual(&f, &x, &UINormSpec::Operator).unwrap());

        let parseval = onb(2);
        assert!(is_quasidual(&parseval, &parseval, &UINormSpec::Operator).unwrap());

        // A generic coisometry misses the optimum.
        let seed = ComplexMatrix::from_rows(&[
            vec![c(0.7, 0.3), c(-0.2, 0.9), c(0.4, 0.0)],
            vec![c(0.1, -0.5), c(0.6, 0.2), c(-0.8, 0.3)],
        ])
        .unwrap();
        let rows = orthonormalize_columns(&seed.adjoint()).unwrap().adjoint();
        let y = Frame::from_synthesis(rows).unwrap();
        assert!(!is_quasidual(&f, &y, &UINormSpec::Operator).unwrap());

        // Non-Parseval candidates are rejected outright.
        let bad = frame_with_singulars(&[2.0, 1.0], 3);
        assert!(matches!(
            is_quasidual(&f, &bad, &UINormSpec::Operator),
            Err(Error::NotParseval(_))
        ));
    }

    #[test]
    fn worst_case_error_examples() {
        let f = Frame::from_vectors(&[
            vec![c(1.0, 0.3), c(0.0, -1.0)],
            vec![c(0.5, 0.0), c(1.0, 1.0)],
            vec![c(-1.0, 0.2), c(0.3, 0.0)],
        ])
        .unwrap();
        let dual = crate::frame::canonical_dual(&f);
        assert!(worst_case_error(&f, &dual).unwrap() < 1e-10);

        // Rotating an orthonormal basis by U gives error ||U* - I||.
        let basis = onb(2);
        let u = orthonormalize_columns(
            &ComplexMatrix::from_rows(&[
                vec![c(1.0, 0.4), c(0.2, -0.3)],
                vec![c(-0.5, 0.1), c(0.9, 0.6)],
            ])
            .unwrap(),
        )
        .unwrap();
        let rotated = Frame::from_synthesis(&u * basis.synthesis()).unwrap();
        let expected = linalg::op_norm(&(&u.adjoint() - &ComplexMatrix::identity(2)));
        assert!((worst_case_error(&basis, &rotated).unwrap() - expected).abs() < 1e-11);

        assert!(matches!(
            worst_case_error(&basis, &f),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn alpha_invariant_under_coefficient_rotation() {
        let f = frame_with_singulars(&[1.4, 0.7], 4);
        let u_seed = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.1), c(0.0, 0.4), c(0.3, 0.0), c(0.2, -0.2)],
            vec![c(0.0, -0.3), c(1.0, 0.0), c(0.5, 0.5), c(0.0, 0.6)],
            vec![c(0.7, 0.0), c(0.2, -0.1), c(1.0, 0.0), c(-0.4, 0.0)],
            vec![c(0.0, 0.5), c(0.3, 0.3), c(0.0, -0.6), c(1.0, 0.0)],
        ])
        .unwrap();
        let u = orthonormalize_columns(&u_seed).unwrap();
        let rotated = Frame::from_synthesis(f.synthesis() * &u).unwrap();
        for norm in [UINormSpec::Operator, UINormSpec::Schatten(1.0), UINormSpec::KyFan(2)] {
            assert!((alpha(&f, &norm) - alpha(&rotated, &norm)).abs() < 1e-10);
        }
    }
}
