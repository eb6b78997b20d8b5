//! Closed-form objects of the Green representation.
//!
//! On `[0, 1]` the linear problem `ᶜDᵅu + y = 0` with the nonlocal boundary
//! conditions has the solution `u = γ λ[u] + ∫ k(·, s) y(s) ds` with
//!
//! ```text
//! γ(t)    = β/Γ(3-α) + η - t
//! k(t, s) = β + (η-s)₊^{α-1}/Γ(α) - (t-s)₊^{α-1}/Γ(α)
//! ```

mod constants;
mod quadrature;

pub use constants::{cone_constants, ConeConstants};
pub use quadrature::KernelQuadrature;

use crate::error::{Error, Result};
use crate::fraccalc::{gamma, GridFunction};
use crate::model::{ProblemParams, StieltjesFunctional};

/// Parameters together with the Gamma values every closed form needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kernel {
    params: ProblemParams,
    gamma_alpha: f64,
    gamma_alpha_plus_one: f64,
    gamma_three_minus_alpha: f64,
}

impl Kernel {
    pub fn new(params: &ProblemParams) -> Result<Self> {
        Ok(Self {
            params: *params,
            gamma_alpha: gamma(params.alpha)?,
            gamma_alpha_plus_one: gamma(params.alpha + 1.0)?,
            gamma_three_minus_alpha: gamma(3.0 - params.alpha)?,
        })
    }

    pub fn params(&self) -> &ProblemParams {
        &self.params
    }

    pub fn gamma_alpha(&self) -> f64 {
        self.gamma_alpha
    }

    pub fn gamma_alpha_plus_one(&self) -> f64 {
        self.gamma_alpha_plus_one
    }

    pub fn gamma_three_minus_alpha(&self) -> f64 {
        self.gamma_three_minus_alpha
    }

    pub fn weight(&self, t: f64) -> f64 {
        let ProblemParams { beta, eta, .. } = self.params;
        beta / self.gamma_three_minus_alpha + eta - t
    }

    pub fn k(&self, t: f64, s: f64) -> f64 {
        let ProblemParams { alpha, beta, eta } = self.params;
        let p = alpha - 1.0;
        let ahead = if s < eta { (eta - s).powf(p) } else { 0.0 };
        let behind = if s < t { (t - s).powf(p) } else { 0.0 };
        beta + (ahead - behind) / self.gamma_alpha
    }

    /// `∫₀¹ k(t, s) ds = β + (η^α - t^α)/Γ(α+1)`.
    pub fn row_integral(&self, t: f64) -> f64 {
        let ProblemParams { alpha, beta, eta } = self.params;
        beta + (eta.powf(alpha) - t.powf(alpha)) / self.gamma_alpha_plus_one
    }
}

pub fn gamma_weight(p: &ProblemParams, t: f64) -> Result<f64> {
    Ok(Kernel::new(p)?.weight(t))
}

pub fn kernel_k(p: &ProblemParams, t: f64, s: f64) -> Result<f64> {
    Ok(Kernel::new(p)?.k(t, s))
}

pub fn row_integral(p: &ProblemParams, t: f64) -> Result<f64> {
    Ok(Kernel::new(p)?.row_integral(t))
}

/// `𝒦(s) = ∫ k(t, s) dΛ(t)`.
pub fn script_k(p: &ProblemParams, l: &StieltjesFunctional, s: f64) -> Result<f64> {
    let kernel = Kernel::new(p)?;
    Ok(l.measure_of(|t| kernel.k(t, s)))
}

/// Solves the linear problem `ᶜDᵅu + y = 0` under the nonlocal boundary
/// conditions through its Green representation.
///
/// `y` is treated as piecewise linear on its (uniform) mesh and the power
/// terms of the kernel are integrated exactly against it.
pub fn green_apply(p: &ProblemParams, l: &StieltjesFunctional, y: &GridFunction) -> Result<GridFunction> {
    let kernel = Kernel::new(p)?;
    let quad = KernelQuadrature::new(p, y.len())?;
    let v = y.with_values(quad.apply(y.values()))?;
    let coupling = l.measure_of(|t| kernel.weight(t));
    if coupling >= 1.0 {
        return Err(Error::NonInvertibleCoupling(coupling));
    }
    let lambda_u = (l.lambda0() + l.measure_of(|t| v.interpolate(t))) / (1.0 - coupling);
    Ok(v.map(|t, vt| kernel.weight(t) * lambda_u + vt))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> ProblemParams {
        ProblemParams::worked_example()
    }

    #[test]
    fn weight_values() {
        let p = example();
        assert!((gamma_weight(&p, 0.0).unwrap() - 1.652_703_333_676_410_1).abs() < 1e-12);
        let g = gamma(1.5).unwrap();
        assert!((gamma_weight(&p, 0.75).unwrap() - 0.8 / g).abs() < 1e-15);
        let q = ProblemParams::new(2.0, 1.0, 0.5).unwrap();
        assert!((gamma_weight(&q, 1.0).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn kernel_values() {
        let p = example();
        assert_eq!(kernel_k(&p, 0.0, 0.9).unwrap(), 0.8);
        assert!((kernel_k(&p, 0.0, 0.0).unwrap() - 1.777_205_023_805_839_8).abs() < 1e-12);
        assert!((kernel_k(&p, 1.0, 0.0).unwrap() - 0.648_825_856_710_327_3).abs() < 1e-12);
        // indicator terms vanish on the diagonal
        assert!((kernel_k(&p, 0.75, 0.75).unwrap() - 0.8).abs() < 1e-15);
    }

    #[test]
    fn row_integral_values() {
        let p = example();
        assert!((row_integral(&p, 0.75).unwrap() - 0.8).abs() < 1e-15);
        assert!((row_integral(&p, 0.25).unwrap() - 1.194_570_914_644_960_5).abs() < 1e-12);
    }

    #[test]
    fn script_k_is_additive() {
        let p = example();
        let one = StieltjesFunctional::single_atom(0.25, 0.5).unwrap();
        let other = StieltjesFunctional::single_atom(0.6, 0.2).unwrap();
        let both = StieltjesFunctional::new(0.0, [one.atoms(), other.atoms()].concat(), None).unwrap();
        for s in [0.0, 0.3, 0.8] {
            let a = script_k(&p, &one, s).unwrap();
            assert!((a - 0.5 * kernel_k(&p, 0.25, s).unwrap()).abs() < 1e-15);
            let sum = a + script_k(&p, &other, s).unwrap();
            assert!((script_k(&p, &both, s).unwrap() - sum).abs() < 1e-14);
        }
        assert_eq!(script_k(&p, &StieltjesFunctional::empty(), 0.4).unwrap(), 0.0);
    }

    #[test]
    fn green_zero_data() {
        let y = GridFunction::constant(33, 0.0).unwrap();
        let l = StieltjesFunctional::single_atom(0.25, 0.5).unwrap();
        let u = green_apply(&example(), &l, &y).unwrap();
        assert!(u.sup_norm() < 1e-15);
    }

    #[test]
    fn green_rejects_strong_coupling() {
        let y = GridFunction::constant(9, 1.0).unwrap();
        let l = StieltjesFunctional::single_atom(0.25, 1.0).unwrap();
        assert!(matches!(green_apply(&example(), &l, &y), Err(Error::NonInvertibleCoupling(_))));
    }
}
