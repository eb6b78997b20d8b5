use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraccalc::{caputo_grid_all, caputo_grid_corrected_all, slope_at_zero, GridFunction};
use crate::model::{eval_checked, Nonlinearity, ProblemParams, StieltjesFunctional};

pub const MIN_VERIFY_NODES: usize = 64;

/// How well a grid function solves the fractional boundary value problem.
///
/// The primary residuals use the Caputo and slope stencils corrected for the
/// `t^α` behaviour every solution has at the origin; the `_plain` variants
/// are the uncorrected L1/L2 and three-point stencils.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    /// `max |ᶜDᵅu + f(t, u)|` over interior nodes.
    pub ode_residual: f64,
    pub ode_residual_plain: f64,
    /// `|u'(0) + λ[u]|`.
    pub bc0_residual: f64,
    pub bc0_residual_plain: f64,
    /// `|β ᶜD^{α-1}u(1) + u(η)|`.
    pub bc1_residual: f64,
    pub bc1_residual_plain: f64,
    /// `min u - c max u`; non-negative means `u` is in the cone.
    pub cone_margin: f64,
    pub nonneg: bool,
    pub in_cone: bool,
    /// `max |f(t, u(t))|` on the mesh, the scale for the ODE residual.
    pub f_sup: f64,
}

pub fn verify(
    p: &ProblemParams,
    l: &StieltjesFunctional,
    f: &dyn Nonlinearity,
    u: &GridFunction,
    c: f64,
) -> Result<ResidualReport> {
    if u.len() < MIN_VERIFY_NODES {
        return Err(Error::InvalidGrid(format!(
            "verification needs at least {MIN_VERIFY_NODES} nodes, got {}",
            u.len()
        )));
    }
    u.uniform_step()?;
    let alpha = p.alpha;

    let forcing = u
        .nodes()
        .iter()
        .zip(u.values())
        .map(|(&t, &v)| eval_checked(f, t, v.max(0.0)))
        .collect::<Result<Vec<f64>>>()?;
    let f_sup = forcing.iter().fold(0.0_f64, |a, v| a.max(v.abs()));

    let interior_max = |d: &[f64]| {
        // d[i] belongs to node i + 1; the last node is not interior
        d[..d.len() - 1].iter().zip(&forcing[1..]).fold(0.0_f64, |acc, (di, fi)| acc.max((di + fi).abs()))
    };
    let ode_residual = interior_max(&caputo_grid_corrected_all(u, alpha, alpha)?);
    let ode_residual_plain = interior_max(&caputo_grid_all(u, alpha)?);

    let lambda_u = l.apply(u);
    let bc0_residual = (slope_at_zero(u, Some(alpha))? + lambda_u).abs();
    let bc0_residual_plain = (slope_at_zero(u, None)? + lambda_u).abs();

    let u_eta = u.interpolate(p.eta);
    let at_one = |d: Vec<f64>| (p.beta * d[d.len() - 1] + u_eta).abs();
    let bc1_residual = at_one(caputo_grid_corrected_all(u, alpha - 1.0, alpha)?);
    let bc1_residual_plain = at_one(caputo_grid_all(u, alpha - 1.0)?);

    let (lo, hi) = (u.min(), u.max());
    let cone_margin = lo - c * hi;
    let nonneg = lo >= 0.0;
    Ok(ResidualReport {
        ode_residual,
        ode_residual_plain,
        bc0_residual,
        bc0_residual_plain,
        bc1_residual,
        bc1_residual_plain,
        cone_margin,
        nonneg,
        in_cone: nonneg && cone_margin >= 0.0,
        f_sup,
    })
}
