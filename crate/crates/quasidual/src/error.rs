use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not Hermitian: {0}")]
    NotHermitian(String),
    #[error("iteration did not converge: {0}")]
    NoConvergence(String),
    #[error("rank deficient: {0}")]
    RankDeficient(String),
    #[error("not a frame: {0}")]
    NotAFrame(String),
    #[error("invalid norm specification: {0}")]
    InvalidSpec(String),
    #[error("invalid Schatten exponent: {0}")]
    InvalidP(String),
    #[error("sequence not sorted non-increasing: {0}")]
    NotSorted(String),
    #[error("Fan-Pall inequalities violated: {0}")]
    FanPallViolated(String),
    #[error("one-step interlacing violated: {0}")]
    InterlacingViolated(String),
    #[error("spectrum rank too low: {0}")]
    RankTooLow(String),
    #[error("not a Parseval frame: {0}")]
    NotParseval(String),
    #[error("no Parseval dual exists: {0}")]
    NoParsevalDual(String),
    #[error("wrong excess for this formula: {0}")]
    WrongExcess(String),
    #[error("invalid spectral model: {0}")]
    InvalidModel(String),
    #[error("theorem hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("invalid spectral data: {0}")]
    InvalidSpectralData(String),
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
