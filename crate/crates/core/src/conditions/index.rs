use rayon::prelude::*;
use serde::Serialize;

use super::certificate::{certify_checks, MultiplicityCertificate};
use super::extremum::{f_inf_estimate, f_sup_estimate, ExtremumKind};
use crate::error::{Error, Result};
use crate::kernel::{cone_constants, ConeConstants};
use crate::model::{Nonlinearity, ProblemParams, StieltjesFunctional};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// `(I⁰_ρ)`: index 0 on `V_ρ`.
    Index0,
    /// `(I¹_ρ)`: index 1 on `K_ρ`.
    Index1,
}

/// One evaluated index condition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RhoCheck {
    pub rho: f64,
    pub kind: CheckKind,
    /// Left-hand side; the condition needs `lhs > 1` for index 0 and
    /// `lhs < 1` for index 1.
    pub lhs: f64,
    pub satisfied: bool,
    /// `f_{ρ,ρ/c}` for index 0, `f^{0,ρ}` for index 1.
    pub f_extremum: f64,
    pub f_extremum_kind: ExtremumKind,
    /// `λ₀` used by the index-0 check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda0: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct CheckOptions {
    /// Replaces the default `λ₀ = Λ₀/ρ + Λ₁` in the index-0 check.
    pub lambda0_override: Option<f64>,
}

/// Any `λ₀` with `λ[u] ≥ λ₀ ρ` on `∂V_ρ`. With `[a,b] = [0,1]` every such `u`
/// satisfies `u ≥ ρ`, so `λ[u] ≥ Λ₀ + ρΛ₁`.
pub fn lambda0_for(l: &StieltjesFunctional, rho: f64) -> Result<f64> {
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::Domain { what: "rho", value: rho });
    }
    Ok(l.lambda0() / rho + l.total_variation())
}

/// The index conditions for fixed parameters and functional.
#[derive(Debug, Clone)]
pub struct IndexConditions<'a> {
    constants: ConeConstants,
    functional: &'a StieltjesFunctional,
    options: CheckOptions,
}

impl<'a> IndexConditions<'a> {
    pub fn new(p: &ProblemParams, l: &'a StieltjesFunctional, options: CheckOptions) -> Result<Self> {
        if let Some(v) = options.lambda0_override {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(Error::Domain { what: "lambda0 override", value: v });
            }
        }
        Ok(Self { constants: cone_constants(p, l)?, functional: l, options })
    }

    pub fn constants(&self) -> &ConeConstants {
        &self.constants
    }

    fn lambda0(&self, rho: f64) -> Result<f64> {
        match self.options.lambda0_override {
            Some(v) => Ok(v),
            None => lambda0_for(self.functional, rho),
        }
    }

    /// `c₂‖γ‖λ₀`, the part of the index-0 left side that does not involve `f`.
    pub fn index0_offset(&self, rho: f64) -> Result<f64> {
        Ok(self.constants.c2 * self.constants.norm_gamma * self.lambda0(rho)?)
    }

    /// `‖γ‖/(1-λ̃[γ]) ∫𝒦 + 1/m`, the factor multiplying `f^{0,ρ}`.
    pub fn index1_coefficient(&self) -> Result<f64> {
        let k = &self.constants;
        let gap = self.coupling_gap()?;
        Ok(k.norm_gamma / gap * k.int_script_k + k.inv_m())
    }

    /// The value `f_{ρ,ρ/c}` has to exceed for index 0.
    pub fn index0_threshold(&self, rho: f64) -> Result<f64> {
        Ok((1.0 - self.index0_offset(rho)?) / self.constants.inv_big_m)
    }

    /// The value `f^{0,ρ}` has to stay below for index 1.
    pub fn index1_threshold(&self, rho: f64) -> Result<f64> {
        let k = &self.constants;
        let offset = self.functional.lambda0() * k.norm_gamma / (rho * self.coupling_gap()?);
        Ok((1.0 - offset) / self.index1_coefficient()?)
    }

    fn coupling_gap(&self) -> Result<f64> {
        let tl = self.constants.tilde_lambda_gamma;
        if tl >= 1.0 {
            Err(Error::NonInvertibleCoupling(tl))
        } else {
            Ok(1.0 - tl)
        }
    }

    pub fn check_index0(&self, f: &dyn Nonlinearity, rho: f64) -> Result<RhoCheck> {
        let lambda0 = self.lambda0(rho)?;
        let ext = f_inf_estimate(f, rho, self.constants.c)?;
        let lhs = self.constants.c2 * self.constants.norm_gamma * lambda0 + ext.value * self.constants.inv_big_m;
        Ok(RhoCheck {
            rho,
            kind: CheckKind::Index0,
            lhs,
            satisfied: lhs > 1.0,
            f_extremum: ext.value,
            f_extremum_kind: ext.kind,
            lambda0: Some(lambda0),
        })
    }

    pub fn check_index1(&self, f: &dyn Nonlinearity, rho: f64) -> Result<RhoCheck> {
        let k = &self.constants;
        let gap = self.coupling_gap()?;
        let ext = f_sup_estimate(f, rho)?;
        let lhs = self.functional.lambda0() * k.norm_gamma / (rho * gap) + self.index1_coefficient()? * ext.value;
        Ok(RhoCheck {
            rho,
            kind: CheckKind::Index1,
            lhs,
            satisfied: lhs < 1.0,
            f_extremum: ext.value,
            f_extremum_kind: ext.kind,
            lambda0: None,
        })
    }

    pub fn check(&self, f: &dyn Nonlinearity, rho: f64, kind: CheckKind) -> Result<RhoCheck> {
        match kind {
            CheckKind::Index0 => self.check_index0(f, rho),
            CheckKind::Index1 => self.check_index1(f, rho),
        }
    }

    pub fn certify(&self, f: &dyn Nonlinearity, rhos: &[(f64, CheckKind)]) -> Result<MultiplicityCertificate> {
        if rhos.is_empty() {
            return Err(Error::InvalidArgument("no rho values to check".into()));
        }
        let checks = rhos.par_iter().map(|&(rho, kind)| self.check(f, rho, kind)).collect::<Result<Vec<_>>>()?;
        Ok(certify_checks(checks, self.constants.c))
    }

    pub fn scan(&self, f: &dyn Nonlinearity, rho_min: f64, rho_max: f64, n: usize) -> Result<Vec<RhoCheck>> {
        if !(rho_min > 0.0 && rho_min < rho_max && rho_max.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "scan needs 0 < rho_min < rho_max, got [{rho_min}, {rho_max}]"
            )));
        }
        if n < 2 {
            return Err(Error::InvalidArgument(format!("scan needs at least 2 points, got {n}")));
        }
        let ratio = (rho_max / rho_min).ln();
        let rhos: Vec<f64> = (0..n)
            .map(|i| match i {
                0 => rho_min,
                _ if i == n - 1 => rho_max,
                _ => rho_min * (ratio * i as f64 / (n - 1) as f64).exp(),
            })
            .collect();
        let pairs: Vec<Vec<RhoCheck>> = rhos
            .par_iter()
            .map(|&rho| Ok(vec![self.check_index0(f, rho)?, self.check_index1(f, rho)?]))
            .collect::<Result<_>>()?;
        Ok(pairs.into_iter().flatten().collect())
    }
}

pub fn check_index0(
    p: &ProblemParams,
    l: &StieltjesFunctional,
    f: &dyn Nonlinearity,
    rho: f64,
    options: CheckOptions,
) -> Result<RhoCheck> {
    IndexConditions::new(p, l, options)?.check_index0(f, rho)
}

pub fn check_index1(
    p: &ProblemParams,
    l: &StieltjesFunctional,
    f: &dyn Nonlinearity,
    rho: f64,
    options: CheckOptions,
) -> Result<RhoCheck> {
    IndexConditions::new(p, l, options)?.check_index1(f, rho)
}

pub fn certify(
    p: &ProblemParams,
    l: &StieltjesFunctional,
    f: &dyn Nonlinearity,
    rhos: &[(f64, CheckKind)],
    options: CheckOptions,
) -> Result<MultiplicityCertificate> {
    IndexConditions::new(p, l, options)?.certify(f, rhos)
}

/// Both checks at `n` log-spaced values in `[rho_min, rho_max]`, ordered by
/// `ρ` and then by kind.
pub fn scan_rho(
    p: &ProblemParams,
    l: &StieltjesFunctional,
    f: &dyn Nonlinearity,
    rho_min: f64,
    rho_max: f64,
    n: usize,
    options: CheckOptions,
) -> Result<Vec<RhoCheck>> {
    IndexConditions::new(p, l, options)?.scan(f, rho_min, rho_max, n)
}
