//! Dense complex linear algebra kernel.
//!
//! Everything here is sized for desk-scale problems (dimensions in the
//! hundreds at most). The eigensolver is a cyclic Jacobi scheme on the
//! Hermitian matrix and the SVD is one-sided Jacobi on columns; both are
//! unconditionally convergent and accurate for clustered spectra, which
//! matters because the construction downstream routinely produces
//! degenerate eigenvalues.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative symmetry tolerance accepted by [`hermitian_eigen`].
pub const TOL_HERM: f64 = 1e-10;
/// Relative reconstruction tolerance guaranteed by [`hermitian_eigen`].
pub const TOL_EIG: f64 = 1e-10;

const MAX_SWEEPS: usize = 80;

/// Dense complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Complex64>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from row slices. All rows must have equal length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ComplexMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Builds a matrix whose j-th column is `cols[j]`.
    pub fn from_cols(cols: &[Vec<Complex64>]) -> Result<Self> {
        if cols.is_empty() || cols[0].is_empty() {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        let rows = cols[0].len();
        if cols.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("ragged columns".into()));
        }
        Ok(Self::from_fn(rows, cols.len(), |i, j| cols[j][i]))
    }

    /// Real diagonal matrix.
    pub fn diag(entries: &[f64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = Complex64::new(e, 0.0);
        }
        m
    }

    /// Real matrix from f64 rows; imaginary parts zero.
    pub fn from_real(rows: &[&[f64]]) -> Self {
        assert!(!rows.is_empty() && !rows[0].is_empty());
        Self::from_fn(rows.len(), rows[0].len(), |i, j| Complex64::new(rows[i][j], 0.0))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Complex64]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            self[(i, j)] = v[i];
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * s)
    }

    pub fn trace(&self) -> Complex64 {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Frobenius norm of the anti-Hermitian part residual `M - M*`.
    pub fn hermitian_residual(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let mut s = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                s += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        s.sqrt()
    }

    /// `(M + M*) / 2`, the Hermitian part of a square matrix.
    pub fn hermitian_part(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + self[(j, i)].conj()) * 0.5
        })
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted non-increasing.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    /// Real eigenvalues, non-increasing.
    pub eigenvalues: Vec<f64>,
    /// Unitary matrix whose i-th column is the eigenvector of `eigenvalues[i]`.
    pub eigenvectors: ComplexMatrix,
}

/// Unitary eigenpair of the 2x2 Hermitian block [[a, c], [conj(c), b]].
///
/// Returns (r11, r21, r12, r22, lam_hi, lam_lo) with R = [[r11, r12], [r21, r22]]
/// unitary and G R = R diag(lam_hi, lam_lo), lam_hi >= lam_lo.
fn eigen2x2(a: f64, b: f64, c: Complex64) -> (Complex64, Complex64, Complex64, Complex64, f64, f64) {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mid = 0.5 * (a + b);
    let hd = 0.5 * (a - b);
    let csq = c.norm_sqr();
    let disc = (hd * hd + csq).sqrt();
    if disc == 0.0 {
        return (one, zero, zero, one, mid, mid);
    }
    let lam_hi = mid + disc;
    let lam_lo = mid - disc;
    // Pick the eigenvector representation without cancellation: the entry
    // `lam_hi - b = disc + hd` is exact when hd >= 0, and symmetrically.
    let (v1, v2) = if hd >= 0.0 {
        (Complex64::new(disc + hd, 0.0), c.conj())
    } else {
        (c, Complex64::new(disc - hd, 0.0))
    };
    let nrm = (v1.norm_sqr() + v2.norm_sqr()).sqrt();
    if nrm == 0.0 {
        return (one, zero, zero, one, a, b);
    }
    let v1 = v1 / nrm;
    let v2 = v2 / nrm;
    // Second column: the orthogonal complement in C^2.
    (v1, v2, -v2.conj(), v1.conj(), lam_hi, lam_lo)
}

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Rejects matrices whose anti-Hermitian part exceeds `TOL_HERM * ||H||`.
/// The reconstruction `V diag(lambda) V* = H` holds to `TOL_EIG * ||H||`.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<EigenDecomposition> {
    if h.rows() != h.cols() {
        return Err(Error::DimensionMismatch(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let n = h.rows();
    let scale = h.frobenius_norm();
    if h.hermitian_residual() > TOL_HERM * scale.max(1.0) {
        return Err(Error::NotHermitian(format!(
            "residual {:.3e} exceeds {:.3e}",
            h.hermitian_residual(),
            TOL_HERM * scale.max(1.0)
        )));
    }

    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    if scale == 0.0 {
        return Ok(EigenDecomposition {
            eigenvalues: vec![0.0; n],
            eigenvectors: v,
        });
    }

    let target = 1e-14 * scale;
    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[(i, j)].norm_sqr();
            }
        }
        if (2.0 * off).sqrt() <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let c = a[(p, q)];
                if c.norm() <= 1e-3 * target / (n as f64) {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let (r11, r21, r12, r22, _, _) = eigen2x2(app, aqq, c);
                // Rows p,q <- R^H applied from the left.
                for j in 0..n {
                    let hp = a[(p, j)];
                    let hq = a[(q, j)];
                    a[(p, j)] = r11.conj() * hp + r21.conj() * hq;
                    a[(q, j)] = r12.conj() * hp + r22.conj() * hq;
                }
                // Columns p,q <- R applied from the right.
                for i in 0..n {
                    let hp = a[(i, p)];
                    let hq = a[(i, q)];
                    a[(i, p)] = hp * r11 + hq * r21;
                    a[(i, q)] = hp * r12 + hq * r22;
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = vp * r11 + vq * r21;
                    v[(i, q)] = vp * r12 + vq * r22;
                }
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(format!(
            "Jacobi eigensolver did not reach {:.1e} in {} sweeps",
            target, MAX_SWEEPS
        )));
    }

    let mut order: Vec<usize> = (0..n).collect();
    let lam: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| lam[j].partial_cmp(&lam[i]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| lam[i]).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Singular value decomposition `M = U diag(s) V*` with `U, V` having
/// orthonormal columns and `s` non-negative, non-increasing.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub singular_values: Vec<f64>,
    pub v: ComplexMatrix,
}

/// One-sided Jacobi SVD. `U` is rows x k, `V` is cols x k, k = min(rows, cols).
pub fn svd(m: &ComplexMatrix) -> Result<Svd> {
    if m.rows() < m.cols() {
        let t = svd(&m.adjoint())?;
        return Ok(Svd {
            u: t.v,
            singular_values: t.singular_values,
            v: t.u,
        });
    }
    let p = m.rows();
    let q = m.cols();
    let mut a = m.clone();
    let mut v = ComplexMatrix::identity(q);

    let mut converged = false;
    for _sweep in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..q {
            for j in (i + 1)..q {
                let mut aii = 0.0;
                let mut ajj = 0.0;
                let mut aij = Complex64::new(0.0, 0.0);
                for k in 0..p {
                    let x = a[(k, i)];
                    let y = a[(k, j)];
                    aii += x.norm_sqr();
                    ajj += y.norm_sqr();
                    aij += x.conj() * y;
                }
                if aij.norm() <= 1e-14 * (aii * ajj).sqrt() {
                    continue;
                }
                rotated = true;
                let (r11, r21, r12, r22, _, _) = eigen2x2(aii, ajj, aij);
                for k in 0..p {
                    let x = a[(k, i)];
                    let y = a[(k, j)];
                    a[(k, i)] = x * r11 + y * r21;
                    a[(k, j)] = x * r12 + y * r22;
                }
                for k in 0..q {
                    let x = v[(k, i)];
                    let y = v[(k, j)];
                    v[(k, i)] = x * r11 + y * r21;
                    v[(k, j)] = x * r12 + y * r22;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(format!(
            "one-sided Jacobi SVD did not settle in {} sweeps",
            MAX_SWEEPS
        )));
    }

    let mut s: Vec<f64> = (0..q)
        .map(|j| (0..p).map(|k| a[(k, j)].norm_sqr()).sum::<f64>().sqrt())
        .collect();
    let mut order: Vec<usize> = (0..q).collect();
    order.sort_by(|&i, &j| s[j].partial_cmp(&s[i]).unwrap());
    s = order.iter().map(|&j| s[j]).collect();
    let a = ComplexMatrix::from_fn(p, q, |i, j| a[(i, order[j])]);
    let v = ComplexMatrix::from_fn(q, q, |i, j| v[(i, order[j])]);

    // Normalize columns into U; columns with negligible norm get an
    // orthonormal completion so U always has orthonormal columns.
    let smax = s.first().copied().unwrap_or(0.0);
    let cutoff = smax * 1e-14;
    let mut u_cols: Vec<Vec<Complex64>> = Vec::with_capacity(q);
    for j in 0..q {
        if s[j] > cutoff && s[j] > 0.0 {
            u_cols.push((0..p).map(|k| a[(k, j)] / s[j]).collect());
        } else {
            u_cols.push(complete_orthonormal(&u_cols, p));
        }
    }
    let u = ComplexMatrix::from_fn(p, q, |i, j| u_cols[j][i]);
    Ok(Svd {
        u,
        singular_values: s,
        v,
    })
}

/// Finds a unit vector orthogonal to all `existing` columns (each of length `dim`).
fn complete_orthonormal(existing: &[Vec<Complex64>], dim: usize) -> Vec<Complex64> {
    for seed in 0..dim {
        let mut w: Vec<Complex64> = (0..dim)
            .map(|i| Complex64::new(if i == seed { 1.0 } else { 0.0 }, 0.0))
            .collect();
        for _pass in 0..2 {
            for col in existing {
                let proj: Complex64 = col.iter().zip(w.iter()).map(|(c, x)| c.conj() * x).sum();
                for (wi, ci) in w.iter_mut().zip(col.iter()) {
                    *wi -= proj * ci;
                }
            }
        }
        let nrm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if nrm > 0.5 {
            return w.into_iter().map(|z| z / nrm).collect();
        }
    }
    unreachable!("fewer than dim orthonormal columns always leave room for one more")
}

/// Polar decomposition `M = V P` of a full-column-rank matrix: `V` has
/// orthonormal columns and `P = (M* M)^(1/2)` is positive definite.
pub fn polar(m: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let f = svd(m)?;
    let k = f.singular_values.len();
    if m.rows() < m.cols() {
        return Err(Error::RankDeficient(format!(
            "{}x{} matrix cannot have full column rank",
            m.rows(),
            m.cols()
        )));
    }
    let smin = f.singular_values[k - 1];
    if smin <= rank_tolerance(m, &f.singular_values) {
        return Err(Error::RankDeficient(format!(
            "smallest singular value {:.3e} below rank tolerance",
            smin
        )));
    }
    let v = &f.u * &f.v.adjoint();
    let p = &(&f.v * &ComplexMatrix::diag(&f.singular_values)) * &f.v.adjoint();
    Ok((v, p))
}

/// Backward-stable rank cutoff: `max(rows, cols) * eps * s_max`.
pub fn rank_tolerance(m: &ComplexMatrix, singular_values: &[f64]) -> f64 {
    let smax = singular_values.first().copied().unwrap_or(0.0);
    m.rows().max(m.cols()) as f64 * f64::EPSILON * smax
}

/// Operator (spectral) norm: the largest singular value.
pub fn op_norm(m: &ComplexMatrix) -> f64 {
    svd(m).map(|f| f.singular_values[0]).unwrap_or(f64::NAN)
}

/// Singular values of `M`, non-increasing.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    svd(m).map(|f| f.singular_values).unwrap_or_default()
}

/// Reduced minimum modulus: the smallest nonzero singular value, which equals
/// the reciprocal operator norm of the pseudoinverse. Zero matrix gives 0.
pub fn gamma(m: &ComplexMatrix) -> f64 {
    let s = singular_values(m);
    let tol = m.rows().max(m.cols()) as f64 * f64::EPSILON * s.first().copied().unwrap_or(0.0);
    s.iter().rev().find(|&&x| x > tol).copied().unwrap_or(0.0)
}

/// Orthonormalizes the columns of `m` by modified Gram-Schmidt (two passes).
pub fn orthonormalize_columns(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    let mut cols: Vec<Vec<Complex64>> = (0..m.cols()).map(|j| m.col(j)).collect();
    for j in 0..cols.len() {
        for _pass in 0..2 {
            let (settled, rest) = cols.split_at_mut(j);
            let current = &mut rest[0];
            for prior in settled.iter() {
                let proj: Complex64 = prior
                    .iter()
                    .zip(current.iter())
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                for (c, p) in current.iter_mut().zip(prior.iter()) {
                    *c -= proj * p;
                }
            }
        }
        let nrm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if nrm <= (m.rows() as f64).sqrt() * f64::EPSILON * 1e3 {
            return Err(Error::RankDeficient(format!(
                "column {} linearly dependent during orthonormalization",
                j
            )));
        }
        for z in cols[j].iter_mut() {
            *z /= nrm;
        }
    }
    ComplexMatrix::from_cols(&cols)
}
