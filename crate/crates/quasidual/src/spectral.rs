//! Alpha for frames of an infinite-dimensional space, computed on symbolic
//! spectral models.
//!
//! A model describes the spectrum of `|F|` on the coefficient side: an
//! essential-spectrum interval, finitely many discrete eigenvalues above and
//! below it, and the excess (kernel dimension). All stored values are on the
//! singular-value scale of `|F|`; the frame bounds `A_F`, `B_F` are exposed
//! as their squares. An infinite-dimensional kernel is recorded by the
//! excess marker alone, never as a listed eigenvalue.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::FrameBounds;

/// Kernel dimension of the synthesis operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Excess {
    Finite(usize),
    Infinite,
}

/// Fredholm index passed to [`rogers_distance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FredholmIndex {
    Finite(i64),
    PlusInfinity,
    MinusInfinity,
}

/// Symbolic spectrum of `|F|` for a frame of an infinite-dimensional space.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralModel {
    ess_lo: f64,
    ess_hi: f64,
    above: Vec<(f64, usize)>,
    below: Vec<(f64, usize)>,
    excess: Excess,
    cluster_at_me: bool,
}

impl SpectralModel {
    /// Validates and builds a model.
    ///
    /// `above` lists eigenvalue/multiplicity pairs strictly above `ess_hi`,
    /// `below` pairs in `[0, ess_lo)`. A finite excess n must appear as the
    /// eigenvalue 0 with multiplicity exactly n in `below`.
    pub fn new(
        ess: (f64, f64),
        above: Vec<(f64, usize)>,
        below: Vec<(f64, usize)>,
        excess: Excess,
        cluster_at_me: bool,
    ) -> Result<Self> {
        let (ess_lo, ess_hi) = ess;
        if !ess_lo.is_finite() || !ess_hi.is_finite() || ess_lo < 0.0 || ess_hi < ess_lo {
            return Err(Error::InvalidModel(format!(
                "essential interval [{}, {}] is not a valid interval of non-negative reals",
                ess_lo, ess_hi
            )));
        }
        if ess_lo == 0.0 {
            return Err(Error::InvalidModel(
                "essential spectrum reaches 0, so the family is not a frame".into(),
            ));
        }
        for &(v, mult) in &above {
            if !v.is_finite() || v <= ess_hi {
                return Err(Error::InvalidModel(format!(
                    "eigenvalue {} is not strictly above the essential interval",
                    v
                )));
            }
            if mult == 0 {
                return Err(Error::InvalidModel("zero multiplicity listed".into()));
            }
        }
        let mut zeros = 0usize;
        for &(v, mult) in &below {
            if !v.is_finite() || v < 0.0 || v >= ess_lo {
                return Err(Error::InvalidModel(format!(
                    "eigenvalue {} is not strictly below the essential interval",
                    v
                )));
            }
            if mult == 0 {
                return Err(Error::InvalidModel("zero multiplicity listed".into()));
            }
            if v == 0.0 {
                zeros += mult;
            }
        }
        match excess {
            Excess::Finite(n) => {
                if zeros != n {
                    return Err(Error::InvalidModel(format!(
                        "finite excess {} must appear as eigenvalue 0 with that multiplicity (found {})",
                        n, zeros
                    )));
                }
            }
            Excess::Infinite => {
                if zeros > 0 {
                    return Err(Error::InvalidModel(
                        "an infinite-dimensional kernel is recorded by the excess marker, not as a listed eigenvalue".into(),
                    ));
                }
            }
        }
        Ok(SpectralModel {
            ess_lo,
            ess_hi,
            above,
            below,
            excess,
            cluster_at_me,
        })
    }

    pub fn ess_lo(&self) -> f64 {
        self.ess_lo
    }

    pub fn ess_hi(&self) -> f64 {
        self.ess_hi
    }

    pub fn above(&self) -> &[(f64, usize)] {
        &self.above
    }

    pub fn below(&self) -> &[(f64, usize)] {
        &self.below
    }

    pub fn excess(&self) -> Excess {
        self.excess
    }

    pub fn cluster_at_me(&self) -> bool {
        self.cluster_at_me
    }

    /// `A_F^(1/2)`: the smallest nonzero spectral point.
    fn lower_half(&self) -> f64 {
        self.below
            .iter()
            .filter(|&&(v, _)| v > 0.0)
            .map(|&(v, _)| v)
            .fold(self.ess_lo, f64::min)
    }

    /// `B_F^(1/2)`: the largest spectral point.
    fn upper_half(&self) -> f64 {
        self.above
            .iter()
            .map(|&(v, _)| v)
            .fold(self.ess_hi, f64::max)
    }
}

/// `u_n`: the n-th largest spectral value above the essential maximum when
/// that many exist, otherwise the essential maximum itself.
pub fn u_n(model: &SpectralModel, n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidModel("u_n needs n >= 1".into()));
    }
    let mut vals: Vec<f64> = Vec::new();
    for &(v, mult) in model.above() {
        vals.extend(std::iter::repeat_n(v, mult));
    }
    vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(vals.get(n - 1).copied().unwrap_or(model.ess_hi()))
}

/// `l_n`: the n-th smallest spectral value below the essential minimum when
/// that many exist, otherwise the essential minimum itself.
pub fn l_n(model: &SpectralModel, n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::InvalidModel("l_n needs n >= 1".into()));
    }
    let mut vals: Vec<f64> = Vec::new();
    for &(v, mult) in model.below() {
        vals.extend(std::iter::repeat_n(v, mult));
    }
    vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(vals.get(n - 1).copied().unwrap_or(model.ess_lo()))
}

/// Optimal frame bounds of the modeled frame, on the frame-operator scale.
pub fn frame_bounds_model(model: &SpectralModel) -> Result<FrameBounds> {
    let a_half = model.lower_half();
    if a_half <= 0.0 {
        return Err(Error::InvalidModel("lower frame bound would be 0".into()));
    }
    let b_half = model.upper_half();
    Ok(FrameBounds {
        lower: a_half * a_half,
        upper: b_half * b_half,
    })
}

/// Whether the optimal bound is reached by an actual Parseval frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Attainment {
    Yes,
    /// Attained, and a minimizer X with `F X*` a multiple of the identity exists.
    YesWithScalarFxStar,
    /// Attained provided the model's cluster flag is truthful.
    Conditional,
    Unknown,
}

/// Which arm of the alpha formula produced the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaBranch {
    /// `A_F >= 1` (and excess allows a Parseval dual): alpha = 0.
    ParsevalDual,
    /// `1 - A_F^(1/2)` dominated.
    LowerDeviation,
    /// `C_F - 1 = u_{n+1} - 1` dominated.
    UpperDeviation,
    /// The `1 + m_e` cap was smaller than both deviations.
    EssentialCap,
}

/// Outcome of an alpha evaluation on a model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlphaReport {
    pub alpha: f64,
    pub attained: Attainment,
    /// Smallest tight-dual bound `1 / (1 - alpha)`; present only when alpha < 1.
    pub beta: Option<f64>,
    pub branch: AlphaBranch,
}

/// `alpha = 1 - min(A_F^(1/2), 1)` for frames with infinite excess. Always
/// attained by an X with `F X* = min(A_F^(1/2), 1) I`.
pub fn alpha_infinite_excess(model: &SpectralModel) -> Result<AlphaReport> {
    if model.excess() != Excess::Infinite {
        return Err(Error::WrongExcess(
            "this formula requires infinite excess".into(),
        ));
    }
    let a_half = model.lower_half();
    let alpha = 1.0 - a_half.min(1.0);
    Ok(AlphaReport {
        alpha,
        attained: Attainment::YesWithScalarFxStar,
        beta: Some((1.0 / a_half).max(1.0)),
        branch: if a_half >= 1.0 {
            AlphaBranch::ParsevalDual
        } else {
            AlphaBranch::LowerDeviation
        },
    })
}

/// `alpha = min(max(u_{n+1} - 1, 1 - A_F^(1/2)), 1 + m_e)` for excess n,
/// with everything evaluated on the spectrum of `|F|`.
pub fn alpha_finite_excess(model: &SpectralModel) -> Result<AlphaReport> {
    let n = match model.excess() {
        Excess::Finite(n) => n,
        Excess::Infinite => {
            return Err(Error::WrongExcess(
                "this formula requires finite excess".into(),
            ))
        }
    };
    let u = u_n(model, n + 1)?;
    let a_half = l_n(model, n + 1)?;
    let cap = 1.0 + model.ess_lo();
    let upper_dev = u - 1.0;
    let lower_dev = 1.0 - a_half;
    let inner = upper_dev.max(lower_dev);
    let alpha = inner.min(cap);
    let branch = if cap < inner {
        AlphaBranch::EssentialCap
    } else if alpha <= 0.0 {
        AlphaBranch::ParsevalDual
    } else if upper_dev >= lower_dev {
        AlphaBranch::UpperDeviation
    } else {
        AlphaBranch::LowerDeviation
    };
    let attained = if alpha < 1.0 {
        Attainment::Yes
    } else if model.cluster_at_me() {
        // Sufficient condition for unitary approximants in the nonzero-index
        // regime: the essential minimum is a cluster point of eigenvalues.
        Attainment::Yes
    } else {
        Attainment::Unknown
    };
    Ok(AlphaReport {
        alpha,
        attained,
        beta: if alpha < 1.0 { Some(1.0 / (1.0 - alpha)) } else { None },
        branch,
    })
}

/// Evaluates whichever alpha formula matches the model's excess.
pub fn alpha_model(model: &SpectralModel) -> Result<AlphaReport> {
    match model.excess() {
        Excess::Infinite => alpha_infinite_excess(model),
        Excess::Finite(_) => alpha_finite_excess(model),
    }
}

/// Two-sided bounds `|1 - A_F^(1/2)| <= alpha <= max(1 - A_F^(1/2), B_F^(1/2) - 1)`.
///
/// Valid under the hypothesis `A_F < 1`, or `A_F > 1` with finite excess.
pub fn alpha_bounds(model: &SpectralModel) -> Result<(f64, f64)> {
    let a_half = model.lower_half();
    let b_half = model.upper_half();
    let hypothesis = a_half < 1.0 || (a_half > 1.0 && model.excess() != Excess::Infinite);
    if !hypothesis {
        return Err(Error::HypothesisNotMet(format!(
            "bounds need A_F < 1, or A_F > 1 with finite excess (A_F^(1/2) = {}, excess {:?})",
            a_half,
            model.excess()
        )));
    }
    let lower = (1.0 - a_half).abs();
    let upper = (1.0 - a_half).max(b_half - 1.0);
    Ok((lower, upper))
}

/// Sufficient conditions under which `alpha = 1 - A_F^(1/2)` is attained:
/// the spectral mass away from `A_F^(1/2)` fits inside the kernel, or
/// `A_F^(1/2) + B_F^(1/2) <= 2`.
pub fn attainment_conditions(model: &SpectralModel) -> Result<bool> {
    let a_half = model.lower_half();
    if a_half >= 1.0 {
        return Err(Error::HypothesisNotMet(format!(
            "attainment conditions apply only when A_F < 1 (A_F^(1/2) = {})",
            a_half
        )));
    }
    let b_half = model.upper_half();
    if a_half + b_half <= 2.0 {
        return Ok(true);
    }
    match model.excess() {
        Excess::Infinite => Ok(true),
        Excess::Finite(n) => {
            // Mass away from A_F^(1/2): a non-degenerate essential interval
            // (or one sitting elsewhere) counts as infinite.
            let tol = 1e-12 * a_half.max(1.0);
            let ess_is_point_at_a = (model.ess_hi() - model.ess_lo()).abs() <= tol
                && (model.ess_lo() - a_half).abs() <= tol;
            if !ess_is_point_at_a {
                return Ok(false);
            }
            let mut mass = 0usize;
            for &(v, mult) in model.above() {
                if (v - a_half).abs() > tol {
                    mass += mult;
                }
            }
            for &(v, mult) in model.below() {
                // Kernel zeros live on the coefficient side, not in S_F.
                if v > 0.0 && (v - a_half).abs() > tol {
                    mass += mult;
                }
            }
            Ok(mass <= n)
        }
    }
}

/// Distance from an operator to the unitary group, from its norm, minimum
/// modulus, essential minimum modulus and Fredholm index. For positive index
/// the caller passes the adjoint's data.
pub fn rogers_distance(
    norm_t: f64,
    m_t: f64,
    m_e_t: f64,
    index: FredholmIndex,
) -> Result<f64> {
    if !(0.0 <= m_t && m_t <= m_e_t && m_e_t <= norm_t) {
        return Err(Error::InvalidSpectralData(format!(
            "need 0 <= m(T) <= m_e(T) <= ||T||, got ({}, {}, {})",
            m_t, m_e_t, norm_t
        )));
    }
    let zero_index = matches!(index, FredholmIndex::Finite(0));
    if zero_index {
        Ok((norm_t - 1.0).max(1.0 - m_t))
    } else {
        Ok((norm_t - 1.0).max(1.0 + m_e_t))
    }
}
