use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fraccalc::gamma;

/// Fractional order `α ∈ (1, 2]`, boundary coefficient `β > 0` and sensor
/// location `η ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemParams {
    pub alpha: f64,
    pub beta: f64,
    pub eta: f64,
}

impl ProblemParams {
    pub fn new(alpha: f64, beta: f64, eta: f64) -> Result<Self> {
        if !(alpha > 1.0 && alpha <= 2.0) {
            return Err(Error::Domain { what: "alpha (need 1 < α ≤ 2)", value: alpha });
        }
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::Domain { what: "beta (need β > 0)", value: beta });
        }
        if !(0.0..=1.0).contains(&eta) {
            return Err(Error::Domain { what: "eta (need 0 ≤ η ≤ 1)", value: eta });
        }
        Ok(Self { alpha, beta, eta })
    }

    /// `α = 3/2, β = 4/5, η = 3/4`.
    pub fn worked_example() -> Self {
        Self { alpha: 1.5, beta: 0.8, eta: 0.75 }
    }
}

/// Both strict inequalities that put the kernel and the weight in the
/// positive regime on the full interval, plus the sign of `1/M`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegimeReport {
    /// `βΓ(α)` against `(1-η)^{α-1}`.
    pub kernel_lhs: f64,
    pub kernel_rhs: f64,
    pub kernel_margin: f64,
    pub kernel_holds: bool,
    /// `β` against `(1-η)Γ(3-α)`.
    pub weight_lhs: f64,
    pub weight_rhs: f64,
    pub weight_margin: f64,
    pub weight_holds: bool,
    /// `βΓ(α+1) + η^α - 1`, positive iff `1/M > 0`.
    pub inv_m_margin: f64,
    pub inv_m_positive: bool,
    pub holds: bool,
}

pub fn validate_regime(p: &ProblemParams) -> Result<RegimeReport> {
    let ProblemParams { alpha, beta, eta } = *p;
    let kernel_lhs = beta * gamma(alpha)?;
    let kernel_rhs = (1.0 - eta).powf(alpha - 1.0);
    let weight_lhs = beta;
    let weight_rhs = (1.0 - eta) * gamma(3.0 - alpha)?;
    let inv_m_margin = beta * gamma(alpha + 1.0)? + eta.powf(alpha) - 1.0;
    let kernel_holds = kernel_lhs > kernel_rhs;
    let weight_holds = weight_lhs > weight_rhs;
    Ok(RegimeReport {
        kernel_lhs,
        kernel_rhs,
        kernel_margin: kernel_lhs - kernel_rhs,
        kernel_holds,
        weight_lhs,
        weight_rhs,
        weight_margin: weight_lhs - weight_rhs,
        weight_holds,
        inv_m_margin,
        inv_m_positive: inv_m_margin > 0.0,
        holds: kernel_holds && weight_holds,
    })
}
