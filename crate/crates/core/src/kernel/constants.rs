use serde::Serialize;

use super::Kernel;
use crate::error::{Error, Result};
use crate::model::{validate_regime, ProblemParams, StieltjesFunctional};

/// Constants that define the cone and enter the index conditions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConeConstants {
    /// Constant upper bound `Φ` of the kernel.
    pub phi: f64,
    pub c1: f64,
    pub c2: f64,
    /// Cone constant `min(c1, c2)`.
    pub c: f64,
    /// `‖γ‖ = γ(0)`.
    pub norm_gamma: f64,
    /// `m`, where `1/m = sup_t ∫ k(t, s) ds`.
    pub m: f64,
    /// `1/M = inf_t ∫ k(t, s) ds`.
    pub inv_big_m: f64,
    /// `λ̃[γ] = ∫ γ dΛ`.
    pub tilde_lambda_gamma: f64,
    /// `∫₀¹ 𝒦(s) ds`.
    pub int_script_k: f64,
}

impl ConeConstants {
    pub fn inv_m(&self) -> f64 {
        1.0 / self.m
    }

    pub fn big_m(&self) -> f64 {
        1.0 / self.inv_big_m
    }

    /// Whether the nonlocal coupling is contractive, `λ̃[γ] < 1`.
    pub fn coupling_ok(&self) -> bool {
        self.tilde_lambda_gamma < 1.0
    }
}

pub fn cone_constants(p: &ProblemParams, l: &StieltjesFunctional) -> Result<ConeConstants> {
    let regime = validate_regime(p)?;
    if !regime.holds {
        return Err(Error::Regime(format!(
            "βΓ(α) = {} vs (1-η)^(α-1) = {}, β = {} vs (1-η)Γ(3-α) = {}",
            regime.kernel_lhs, regime.kernel_rhs, regime.weight_lhs, regime.weight_rhs
        )));
    }
    let kernel = Kernel::new(p)?;
    let ProblemParams { alpha, beta, eta } = *p;
    let g_a = kernel.gamma_alpha();
    let g_ap1 = kernel.gamma_alpha_plus_one();
    let g_3ma = kernel.gamma_three_minus_alpha();

    let inv_big_m = (beta * g_ap1 + eta.powf(alpha) - 1.0) / g_ap1;
    if !(inv_big_m > 0.0) {
        return Err(Error::NonPositiveInvM(inv_big_m));
    }

    let upper = beta * g_a + eta.powf(alpha - 1.0);
    let phi = upper / g_a;
    let c1 = (beta * g_a - (1.0 - eta).powf(alpha - 1.0)) / upper;
    let c2 = (beta + (eta - 1.0) * g_3ma) / (beta + eta * g_3ma);
    let norm_gamma = eta + beta / g_3ma;
    let m = g_ap1 / (beta * g_ap1 + eta.powf(alpha));

    Ok(ConeConstants {
        phi,
        c1,
        c2,
        c: c1.min(c2),
        norm_gamma,
        m,
        inv_big_m,
        tilde_lambda_gamma: l.measure_of(|t| kernel.weight(t)),
        int_script_k: l.measure_of(|t| kernel.row_integral(t)),
    })
}
