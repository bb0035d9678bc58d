//! Optimal Parseval approximation of frames.
//!
//! A frame for C^n is a spanning family of m >= n vectors; analyzing a
//! signal with one frame and synthesizing with another reconstructs it up to
//! the operator `F X* - I`. This crate computes, for any frame F and any
//! unitarily invariant norm, the smallest achievable `|||F X* - I|||` over
//! all Parseval frames X (the bound `alpha`), constructs minimizers
//! explicitly, decides when a genuine Parseval dual exists, and evaluates
//! the closed-form `alpha` of infinite-dimensional frames described by
//! symbolic spectral models.
//!
//! The construction runs through three pieces of machinery, each usable on
//! its own:
//!
//! - a dense complex kernel ([`linalg`]): Jacobi Hermitian eigensolver,
//!   one-sided Jacobi SVD, polar decomposition, reduced minimum modulus;
//! - symmetric gauge functions ([`uin`]): Schatten-p and Ky Fan k norms
//!   evaluated on singular values;
//! - an inverse-eigenvalue constructor ([`fanpall`]): subspaces on which a
//!   positive matrix compresses to any spectrum allowed by the Fan-Pall
//!   inequalities.
//!
//! On top sit the frame model ([`frame`]), the optimal bound and quasi-dual
//! construction ([`optimal`]), symbolic infinite-dimensional models
//! ([`spectral`]), and a randomized certificate ([`certify`]).
//!
//! ## Examples
//!
//! Each capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── frame_basics.rs            bounds, excess, canonical dual, predicates
//! ├── optimal_bound.rs           alpha under several norms, optimal spectrum
//! ├── build_quasidual.rs         construct X, verify optimality invariants
//! ├── nearest_unitary.rs         polar factor as the closest unitary
//! ├── prescribed_compression.rs  Fan-Pall feasibility and deflation chains
//! ├── parseval_dual_dilation.rs  existence predicate, oblique dilation
//! ├── infinite_dimensional.rs    spectral models, u_n/l_n, Rogers distance
//! ├── certify_bound.rs           sampling certificate for alpha
//! └── file_roundtrip.rs          JSON/CSV frame and model files
//! ```
//!
//! ```bash
//! cargo run -p quasidual --example build_quasidual
//! ```
//!
//! ## Command line
//!
//! The `qd` binary exposes the same operations on files:
//!
//! ```bash
//! qd analyze   frame.json
//! qd quasidual frame.json --norm s2 --out x.json
//! qd spectral  model.json
//! qd certify   frame.json --norm sinf --samples 10000 --seed 1
//! ```

pub mod certify;
pub mod error;
pub mod fanpall;
pub mod frame;
pub mod io;
pub mod linalg;
pub mod optimal;
pub mod spectral;
pub mod uin;

pub use error::{Error, Result};
pub use frame::{Frame, FrameBounds};
pub use linalg::ComplexMatrix;
pub use optimal::{alpha, alpha_p, construct, parseval_dual_exists, QuasiDualResult};
pub use spectral::SpectralModel;
pub use uin::UINormSpec;
