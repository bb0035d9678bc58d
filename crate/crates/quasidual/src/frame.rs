//! Finite frames for C^n stored through their synthesis matrix.
//!
//! A frame is a spanning family of m vectors in C^n, m >= n. The synthesis
//! matrix is n x m with the i-th member as its i-th column; the analysis
//! operator is its adjoint, the frame operator is `F F*` and the Gramian is
//! `F* F`. Zero vectors are legal members: they do not affect the frame
//! condition.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, hermitian_eigen, ComplexMatrix};

/// Absolute operator-norm tolerance for duality and Parseval predicates.
pub const TOL_DUAL: f64 = 1e-8;

/// A frame for C^n, held as its n x m synthesis matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    synthesis: ComplexMatrix,
}

/// Optimal frame bounds: the extreme eigenvalues of the frame operator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
}

impl Frame {
    /// Builds a frame from m vectors of length n (columns of the synthesis).
    pub fn from_vectors(vectors: &[Vec<Complex64>]) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::NotAFrame("no vectors given".into()));
        }
        let n = vectors[0].len();
        if vectors.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(
                "frame vectors have differing lengths".into(),
            ));
        }
        if n == 0 {
            return Err(Error::DimensionMismatch("frame vectors are empty".into()));
        }
        Frame::from_synthesis(ComplexMatrix::from_cols(vectors)?)
    }

    /// Builds a frame from an n x m synthesis matrix, validating rank n.
    pub fn from_synthesis(synthesis: ComplexMatrix) -> Result<Self> {
        if synthesis.cols() < synthesis.rows() {
            return Err(Error::NotAFrame(format!(
                "{} vectors cannot span C^{}",
                synthesis.cols(),
                synthesis.rows()
            )));
        }
        if !synthesis.all_finite() {
            return Err(Error::NotAFrame("synthesis has non-finite entries".into()));
        }
        if linalg::gamma(&synthesis) <= 0.0 {
            return Err(Error::NotAFrame(format!(
                "synthesis matrix has rank < {} (family does not span)",
                synthesis.rows()
            )));
        }
        // gamma ignores singular values at rank tolerance; make sure the rank
        // really is n by counting the surviving ones.
        let s = linalg::singular_values(&synthesis);
        let tol = linalg::rank_tolerance(&synthesis, &s);
        let rank = s.iter().filter(|&&x| x > tol).count();
        if rank < synthesis.rows() {
            return Err(Error::NotAFrame(format!(
                "synthesis matrix has rank {} < {}",
                rank,
                synthesis.rows()
            )));
        }
        Ok(Frame { synthesis })
    }

    /// Ambient dimension n.
    pub fn dim(&self) -> usize {
        self.synthesis.rows()
    }

    /// Number of frame members m.
    pub fn len(&self) -> usize {
        self.synthesis.cols()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid frame always has m >= n >= 1 members
    }

    /// The n x m synthesis matrix.
    pub fn synthesis(&self) -> &ComplexMatrix {
        &self.synthesis
    }

    /// The i-th frame vector.
    pub fn vector(&self, i: usize) -> Vec<Complex64> {
        self.synthesis.col(i)
    }

    /// Frame operator `S = F F*`, an n x n positive invertible matrix.
    pub fn frame_operator(&self) -> ComplexMatrix {
        &self.synthesis * &self.synthesis.adjoint()
    }

    /// Gramian `F* F`, an m x m positive semidefinite matrix of rank n.
    pub fn gramian(&self) -> ComplexMatrix {
        &self.synthesis.adjoint() * &self.synthesis
    }

    /// Eigenvalues of the Gramian, non-increasing, length m. Computed as the
    /// squared singular values of the synthesis padded with excess zeros,
    /// which avoids squaring the condition number inside an eigensolver.
    pub fn gramian_spectrum(&self) -> Vec<f64> {
        let mut lam: Vec<f64> = linalg::singular_values(&self.synthesis)
            .iter()
            .map(|s| s * s)
            .collect();
        lam.resize(self.len(), 0.0);
        lam
    }
}

/// Optimal frame bounds `A = gamma(F)^2`, `B = ||F||^2`.
pub fn frame_bounds(frame: &Frame) -> FrameBounds {
    let g = linalg::gamma(frame.synthesis());
    let b = linalg::op_norm(frame.synthesis());
    FrameBounds {
        lower: g * g,
        upper: b * b,
    }
}

/// Excess: dimension of the nullspace of the synthesis operator, `m - n`.
pub fn excess(frame: &Frame) -> usize {
    frame.len() - frame.dim()
}

/// Canonical dual frame `{S^{-1} f_i}`.
pub fn canonical_dual(frame: &Frame) -> Frame {
    let s = frame.frame_operator();
    let e = hermitian_eigen(&s).expect("frame operator is Hermitian");
    // S^{-1} = V diag(1/lambda) V*; the frame condition keeps lambda > 0.
    let inv: Vec<f64> = e.eigenvalues.iter().map(|l| 1.0 / l).collect();
    let sinv = &(&e.eigenvectors * &ComplexMatrix::diag(&inv)) * &e.eigenvectors.adjoint();
    Frame {
        synthesis: &sinv * frame.synthesis(),
    }
}

/// True iff `F G* = I`, i.e. (F, G) is a dual pair.
pub fn is_dual_pair(f: &Frame, g: &Frame) -> Result<bool> {
    if f.dim() != g.dim() || f.len() != g.len() {
        return Err(Error::DimensionMismatch(format!(
            "cannot pair a {}x{} frame with a {}x{} frame",
            f.dim(),
            f.len(),
            g.dim(),
            g.len()
        )));
    }
    let prod = f.synthesis() * &g.synthesis().adjoint();
    let resid = &prod - &ComplexMatrix::identity(f.dim());
    Ok(linalg::op_norm(&resid) <= TOL_DUAL)
}

/// True iff the synthesis operator is a coisometry (`F F* = I`).
pub fn is_parseval(frame: &Frame) -> bool {
    let resid = &frame.frame_operator() - &ComplexMatrix::identity(frame.dim());
    linalg::op_norm(&resid) <= TOL_DUAL
}
