//! Constructive Fan-Pall machinery.
//!
//! Given a positive Hermitian `H` with spectrum `lambda` and a target vector
//! `mu` satisfying the Fan-Pall inequalities, this module builds an
//! n-dimensional subspace `S` such that the compression of `H` to `S` has
//! eigenvalues `mu`. The route is a chain of one-step deflations: an explicit
//! interlacing chain from `lambda` down to `mu`, and at each level the
//! classical rational-weight vector whose orthogonal complement realizes the
//! next spectrum. Cost is O((m-n) m^3).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, orthonormalize_columns, ComplexMatrix};

/// Default slack used when comparing spectra against the Fan-Pall box.
pub const DEFAULT_TOL_FP: f64 = 1e-8;

/// Relative tolerance under which eigenvalues are grouped as ties.
const TIE_REL: f64 = 1e-10;

/// A chain of spectra nu^(m), nu^(m-1), ..., nu^(n), each interlacing the
/// previous one, with nu^(m) = lambda and nu^(n) = mu.
#[derive(Clone, Debug)]
pub struct InterlacingChain {
    spectra: Vec<Vec<f64>>,
}

impl InterlacingChain {
    /// Levels from length m down to length n.
    pub fn levels(&self) -> &[Vec<f64>] {
        &self.spectra
    }

    /// The spectrum of length `k`.
    pub fn level(&self, k: usize) -> &[f64] {
        let m = self.spectra[0].len();
        &self.spectra[m - k]
    }
}

/// Orthonormal basis of the constructed subspace S, one column per dimension.
#[derive(Clone, Debug)]
pub struct SubspaceBasis {
    /// m x n matrix with orthonormal columns spanning S.
    pub basis: ComplexMatrix,
}

impl SubspaceBasis {
    /// The orthogonal projection `P_S = B B*`.
    pub fn projection(&self) -> ComplexMatrix {
        &self.basis * &self.basis.adjoint()
    }
}

fn ensure_sorted_non_increasing(v: &[f64], name: &str) -> Result<()> {
    if v.windows(2).any(|w| w[1] > w[0] + 1e-12 * w[0].abs().max(1.0)) {
        return Err(Error::NotSorted(format!("{} must be non-increasing", name)));
    }
    Ok(())
}

/// Checks the Fan-Pall inequalities `lambda_i >= mu_i` and
/// `lambda_{m-n+i} <= mu_i`, with `tol` slack for equality cases.
pub fn check_fan_pall(lambda: &[f64], mu: &[f64], tol: f64) -> Result<bool> {
    let m = lambda.len();
    let n = mu.len();
    if n > m {
        return Err(Error::DimensionMismatch(format!(
            "target spectrum longer ({}) than source ({})",
            n, m
        )));
    }
    ensure_sorted_non_increasing(lambda, "lambda")?;
    ensure_sorted_non_increasing(mu, "mu")?;
    for i in 0..n {
        if lambda[i] < mu[i] - tol || lambda[m - n + i] > mu[i] + tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the interlacing chain `nu^(k)_j = max(mu_j, lambda_{j+m-k})` for
/// `j <= n` and `nu^(k)_j = lambda_{j+m-k}` for `j > n`.
pub fn interlace_chain(lambda: &[f64], mu: &[f64], tol: f64) -> Result<InterlacingChain> {
    if !check_fan_pall(lambda, mu, tol)? {
        return Err(Error::FanPallViolated(format!(
            "no compression of spectrum {:?} attains {:?}",
            lambda, mu
        )));
    }
    let m = lambda.len();
    let n = mu.len();
    let mut spectra = Vec::with_capacity(m - n + 1);
    for k in (n..=m).rev() {
        let level: Vec<f64> = (0..k)
            .map(|j| {
                let shifted = lambda[j + m - k];
                if j < n {
                    mu[j].max(shifted)
                } else {
                    shifted
                }
            })
            .collect();
        spectra.push(level);
    }
    Ok(InterlacingChain { spectra })
}

/// One deflation step: a unit vector `w` such that the compression of
/// `diag(lambda)` to the hyperplane orthogonal to `w` has eigenvalues `nu`.
///
/// For distinct `lambda` the weights are
/// `w_i^2 = prod_j (nu_j - lambda_i) / prod_{j != i} (lambda_j - lambda_i)`.
/// Repeated eigenvalues are grouped: forced copies of a repeated value in
/// `nu` consume group members with weight zero, and an exact match
/// `nu_j = lambda_i` zeroes the numerator outright.
pub fn deflate_once(lambda: &[f64], nu: &[f64], tol: f64) -> Result<Vec<f64>> {
    let k = lambda.len();
    if nu.len() + 1 != k {
        return Err(Error::DimensionMismatch(format!(
            "deflation target must have length {} (got {})",
            k - 1,
            nu.len()
        )));
    }
    for j in 0..k - 1 {
        if nu[j] > lambda[j] + tol || nu[j] < lambda[j + 1] - tol {
            return Err(Error::InterlacingViolated(format!(
                "nu[{}] = {} outside [{}, {}]",
                j,
                nu[j],
                lambda[j + 1],
                lambda[j]
            )));
        }
    }
    if k == 1 {
        return Ok(vec![1.0]);
    }

    // Clamp rounding excursions back into the interlacing box.
    let nu: Vec<f64> = (0..k - 1)
        .map(|j| nu[j].min(lambda[j]).max(lambda[j + 1]))
        .collect();

    let scale = lambda[0].abs().max(lambda[k - 1].abs()).max(f64::MIN_POSITIVE);
    let tie = TIE_REL * scale;

    // Group equal eigenvalues (chained within the tie tolerance).
    let mut groups: Vec<(usize, usize)> = Vec::new(); // inclusive index ranges
    let mut start = 0;
    for i in 1..=k {
        if i == k || (lambda[i - 1] - lambda[i]).abs() > tie {
            groups.push((start, i - 1));
            start = i;
        }
    }

    // Between members of a group the interlacing squeezes nu to the group
    // value; those entries are forced and drop out of the reduced problem.
    let mut forced = vec![false; k - 1];
    for &(a, b) in &groups {
        for item in forced.iter_mut().take(b).skip(a) {
            *item = true;
        }
    }
    let reduced_nu: Vec<f64> = (0..k - 1).filter(|&j| !forced[j]).map(|j| nu[j]).collect();
    let reduced_lam: Vec<f64> = groups.iter().map(|&(_, b)| lambda[b]).collect();
    debug_assert_eq!(reduced_nu.len() + 1, reduced_lam.len());

    // Rational weights on the reduced (distinct) spectrum, in log space so
    // long products cannot overflow.
    let kk = reduced_lam.len();
    let mut wsq = vec![0.0f64; kk];
    for g in 0..kk {
        let lg = reduced_lam[g];
        let mut log_ratio = 0.0f64;
        let mut sign = 1.0f64;
        let mut snapped = false;
        for &nuj in &reduced_nu {
            let d = nuj - lg;
            if d.abs() <= tie {
                snapped = true;
                break;
            }
            log_ratio += d.abs().ln();
            if d < 0.0 {
                sign = -sign;
            }
        }
        if snapped {
            continue;
        }
        for (h, &lh) in reduced_lam.iter().enumerate() {
            if h == g {
                continue;
            }
            let d = lh - lg;
            log_ratio -= d.abs().ln();
            if d < 0.0 {
                sign = -sign;
            }
        }
        wsq[g] = (sign * log_ratio.exp()).max(0.0);
    }

    let total: f64 = wsq.iter().sum();
    debug_assert!(total > 0.0, "deflation weights vanished");
    let mut w = vec![0.0f64; k];
    for (g, &(_, b)) in groups.iter().enumerate() {
        // The last member of each group carries the weight; the others mix
        // with weight zero (the tie rule).
        w[b] = (wsq[g] / total).sqrt();
    }
    Ok(w)
}

/// Columns of the Householder reflector orthogonal to the real unit vector
/// `w`: a k x (k-1) orthonormal basis of the hyperplane `w^perp`.
fn hyperplane_basis(w: &[f64]) -> ComplexMatrix {
    let k = w.len();
    let s = if w[0] >= 0.0 { 1.0 } else { -1.0 };
    let mut v = w.to_vec();
    v[0] += s;
    let vnorm_sq: f64 = v.iter().map(|x| x * x).sum();
    ComplexMatrix::from_fn(k, k - 1, |i, j| {
        let col = j + 1;
        let h = (if i == col { 1.0 } else { 0.0 }) - 2.0 * v[i] * v[col] / vnorm_sq;
        Complex64::new(h, 0.0)
    })
}

/// Builds an n-dimensional subspace S of C^m such that the compression of the
/// positive Hermitian `h` to S has eigenvalues `mu`.
///
/// Walks the interlacing chain, deflating one dimension per step and
/// re-eigendecomposing the compressed operator so rounding never compounds,
/// then re-orthonormalizes the nested basis.
pub fn build_compression_subspace(
    h: &ComplexMatrix,
    mu: &[f64],
    tol: f64,
) -> Result<SubspaceBasis> {
    let m = h.rows();
    let n = mu.len();
    let eig = hermitian_eigen(h)?;
    let chain = interlace_chain(&eig.eigenvalues, mu, tol)?;

    let mut basis = ComplexMatrix::identity(m);
    for k in ((n + 1)..=m).rev() {
        let compressed = &(&basis.adjoint() * h) * &basis;
        let level_eig = hermitian_eigen(&compressed.hermitian_part())?;
        let w = deflate_once(&level_eig.eigenvalues, chain.level(k - 1), tol)?;
        let step = &level_eig.eigenvectors * &hyperplane_basis(&w);
        basis = orthonormalize_columns(&(&basis * &step))?;
    }
    Ok(SubspaceBasis { basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian_eigen;

    /// Brute-force oracle: eigenvalues of the compression of diag(lambda) to
    /// the hyperplane orthogonal to w.
    fn compression_spectrum_oracle(lambda: &[f64], w: &[f64]) -> Vec<f64> {
        let basis = hyperplane_basis(w);
        let d = ComplexMatrix::diag(lambda);
        let compressed = &(&basis.adjoint() * &d) * &basis;
        hermitian_eigen(&compressed.hermitian_part())
            .unwrap()
            .eigenvalues
    }

    #[test]
    fn fan_pall_check_examples() {
        let tol = DEFAULT_TOL_FP;
        assert!(check_fan_pall(&[3.0, 2.0, 1.0], &[2.5, 1.5], tol).unwrap());
        assert!(check_fan_pall(&[3.0, 2.0, 1.0], &[3.0, 1.0], tol).unwrap());
        assert!(!check_fan_pall(&[3.0, 2.0, 1.0], &[3.5, 1.0], tol).unwrap());
        assert!(matches!(
            check_fan_pall(&[1.0, 2.0], &[1.5], tol),
            Err(Error::NotSorted(_))
        ));
    }

    #[test]
    fn chain_single_step() {
        let chain = interlace_chain(&[3.0, 2.0, 1.0], &[2.5, 1.5], DEFAULT_TOL_FP).unwrap();
        assert_eq!(chain.levels(), &[vec![3.0, 2.0, 1.0], vec![2.5, 1.5]]);
    }

    #[test]
    fn chain_empty_descent() {
        let chain = interlace_chain(&[2.0, 1.0], &[2.0, 1.0], DEFAULT_TOL_FP).unwrap();
        assert_eq!(chain.levels(), &[vec![2.0, 1.0]]);
    }

    #[test]
    fn chain_two_steps() {
        let chain = interlace_chain(&[4.0, 1.0, 0.0, 0.0], &[1.0, 1.0], DEFAULT_TOL_FP).unwrap();
        assert_eq!(
            chain.levels(),
            &[
                vec![4.0, 1.0, 0.0, 0.0],
                vec![1.0, 1.0, 0.0],
                vec![1.0, 1.0]
            ]
        );
    }

    #[test]
    fn chain_rejects_infeasible_target() {
        assert!(matches!(
            interlace_chain(&[3.0, 2.0, 1.0], &[3.5, 1.0], DEFAULT_TOL_FP),
            Err(Error::FanPallViolated(_))
        ));
    }

    #[test]
    fn chain_levels_interlace() {
        let chain =
            interlace_chain(&[9.0, 4.0, 2.0, 1.0, 0.0], &[3.0, 1.5], DEFAULT_TOL_FP).unwrap();
        let levels = chain.levels();
        assert_eq!(levels.first().unwrap(), &vec![9.0, 4.0, 2.0, 1.0, 0.0]);
        assert_eq!(levels.last().unwrap(), &vec![3.0, 1.5]);
        for pair in levels.windows(2) {
            let (up, lo) = (&pair[0], &pair[1]);
            for j in 0..lo.len() {
                assert!(up[j] >= lo[j] - 1e-14);
                assert!(lo[j] >= up[j + 1] - 1e-14);
            }
        }
    }

    #[test]
    fn deflate_hand_derived_weights() {
        let w = deflate_once(&[3.0, 2.0, 1.0], &[2.5, 1.5], DEFAULT_TOL_FP).unwrap();
        assert!((w[0] - 0.375f64.sqrt()).abs() < 1e-12);
        assert!((w[1] - 0.25f64.sqrt()).abs() < 1e-12);
        assert!((w[2] - 0.375f64.sqrt()).abs() < 1e-12);
        let spectrum = compression_spectrum_oracle(&[3.0, 2.0, 1.0], &w);
        assert!((spectrum[0] - 2.5).abs() < 1e-10);
        assert!((spectrum[1] - 1.5).abs() < 1e-10);
    }

    #[test]
    fn deflate_boundary_tie() {
        let w = deflate_once(&[2.0, 1.0], &[2.0], DEFAULT_TOL_FP).unwrap();
        assert_eq!(w, vec![0.0, 1.0]);
        let spectrum = compression_spectrum_oracle(&[2.0, 1.0], &w);
        assert!((spectrum[0] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn deflate_full_degeneracy_returns_last_axis() {
        let c = 1.7;
        let w = deflate_once(&[c, c, c], &[c, c], DEFAULT_TOL_FP).unwrap();
        assert_eq!(w, vec![0.0, 0.0, 1.0]);
    }

    #[test]
    fn deflate_rejects_interlacing_violation() {
        assert!(matches!(
            deflate_once(&[3.0, 2.0, 1.0], &[2.5, 2.8], DEFAULT_TOL_FP),
            Err(Error::InterlacingViolated(_))
        ));
    }

    #[test]
    fn deflate_weights_sum_to_one_by_identity() {
        let lambda = [5.0, 3.5, 2.0, 0.5];
        let nu = [4.0, 3.0, 1.0];
        let w = deflate_once(&lambda, &nu, DEFAULT_TOL_FP).unwrap();
        let total: f64 = w.iter().map(|x| x * x).sum();
        assert!((total - 1.0).abs() < 1e-12);
        let spectrum = compression_spectrum_oracle(&lambda, &w);
        for (got, want) in spectrum.iter().zip(nu.iter()) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn deflate_with_repeated_nu_inside_simple_lambda() {
        // nu may repeat a simple eigenvalue of lambda; weights stay rational.
        let w = deflate_once(&[3.0, 2.0, 1.0], &[2.0, 2.0], DEFAULT_TOL_FP).unwrap();
        assert!((w[0] - 0.5f64.sqrt()).abs() < 1e-12);
        assert!(w[1].abs() < 1e-15);
        assert!((w[2] - 0.5f64.sqrt()).abs() < 1e-12);
        let spectrum = compression_spectrum_oracle(&[3.0, 2.0, 1.0], &w);
        assert!((spectrum[0] - 2.0).abs() < 1e-10 && (spectrum[1] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn subspace_for_diagonal_operator() {
        let h = ComplexMatrix::diag(&[3.0, 2.0, 1.0]);
        let s = build_compression_subspace(&h, &[2.5, 1.5], DEFAULT_TOL_FP).unwrap();
        let compressed = &(&s.basis.adjoint() * &h) * &s.basis;
        let eig = hermitian_eigen(&compressed.hermitian_part()).unwrap();
        assert!((eig.eigenvalues[0] - 2.5).abs() < 1e-9);
        assert!((eig.eigenvalues[1] - 1.5).abs() < 1e-9);
        let btb = &s.basis.adjoint() * &s.basis;
        assert!((&btb - &ComplexMatrix::identity(2)).frobenius_norm() < 1e-12);
    }

    #[test]
    fn subspace_for_identity_is_any_plane() {
        let h = ComplexMatrix::identity(4);
        let s = build_compression_subspace(&h, &[1.0, 1.0], DEFAULT_TOL_FP).unwrap();
        let compressed = &(&s.basis.adjoint() * &h) * &s.basis;
        assert!((&compressed - &ComplexMatrix::identity(2)).frobenius_norm() < 1e-10);
    }

    #[test]
    fn subspace_avoids_top_eigenvalue() {
        let h = ComplexMatrix::diag(&[4.0, 1.0, 0.0]);
        let s = build_compression_subspace(&h, &[1.0, 1.0], DEFAULT_TOL_FP).unwrap();
        let compressed = &(&s.basis.adjoint() * &h) * &s.basis;
        let eig = hermitian_eigen(&compressed.hermitian_part()).unwrap();
        assert!((eig.eigenvalues[0] - 1.0).abs() < 1e-9);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn subspace_for_non_diagonal_operator() {
        // Conjugate a known spectrum by a fixed unitary and hit a target
        // strictly inside the Fan-Pall box.
        let base = ComplexMatrix::from_rows(&[
            vec![Complex64::new(1.0, 0.5), Complex64::new(0.0, -1.0), Complex64::new(2.0, 0.0), Complex64::new(0.3, 0.1)],
            vec![Complex64::new(0.5, 0.0), Complex64::new(1.0, 1.0), Complex64::new(-1.0, 0.3), Complex64::new(0.0, 0.9)],
            vec![Complex64::new(0.0, -0.6), Complex64::new(0.2, 0.0), Complex64::new(1.5, 0.0), Complex64::new(-1.0, 0.0)],
            vec![Complex64::new(0.9, 0.1), Complex64::new(0.0, 0.8), Complex64::new(0.4, -0.2), Complex64::new(1.0, -0.7)],
        ])
        .unwrap();
        let u = orthonormalize_columns(&base).unwrap();
        let h = &(&u * &ComplexMatrix::diag(&[6.0, 4.0, 2.0, 0.5])) * &u.adjoint();
        let mu = [4.5, 1.0];
        let s = build_compression_subspace(&h.hermitian_part(), &mu, DEFAULT_TOL_FP).unwrap();
        let compressed = &(&s.basis.adjoint() * &h) * &s.basis;
        let eig = hermitian_eigen(&compressed.hermitian_part()).unwrap();
        assert!((eig.eigenvalues[0] - 4.5).abs() < 1e-8);
        assert!((eig.eigenvalues[1] - 1.0).abs() < 1e-8);
    }
}
