use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{eval_checked, Nonlinearity};

const BASE_POINTS: usize = 33;
const LEVELS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremumKind {
    /// Grid search; an over-estimate of an infimum, an under-estimate of a
    /// supremum.
    Sampled,
    /// Exact value supplied by the nonlinearity.
    AnalyticHint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Search {
    Min,
    Max,
}

/// Normalized extremum `f/ρ` over a box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Extremum {
    pub value: f64,
    pub kind: ExtremumKind,
}

/// `f_{ρ,ρ/c} = inf { f(t,u)/ρ : t ∈ [0,1], u ∈ [ρ, ρ/c] }`.
pub fn f_inf_estimate(f: &dyn Nonlinearity, rho: f64, c: f64) -> Result<Extremum> {
    check_rho(rho)?;
    if !(c > 0.0 && c <= 1.0) {
        return Err(Error::Domain { what: "cone constant", value: c });
    }
    extremum(f, (0.0, 1.0), (rho, rho / c), Search::Min, rho)
}

/// `f^{0,ρ} = sup { f(t,u)/ρ : t ∈ [0,1], u ∈ [0, ρ] }`.
pub fn f_sup_estimate(f: &dyn Nonlinearity, rho: f64) -> Result<Extremum> {
    check_rho(rho)?;
    extremum(f, (0.0, 1.0), (0.0, rho), Search::Max, rho)
}

fn check_rho(rho: f64) -> Result<()> {
    if rho > 0.0 && rho.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain { what: "rho", value: rho })
    }
}

fn extremum(f: &dyn Nonlinearity, t: (f64, f64), u: (f64, f64), search: Search, rho: f64) -> Result<Extremum> {
    let hint = match search {
        Search::Min => f.inf_hint(t, u),
        Search::Max => f.sup_hint(t, u),
    };
    if let Some(v) = hint {
        return Ok(Extremum { value: v / rho, kind: ExtremumKind::AnalyticHint });
    }
    let levels = sampled_extremum_levels(f, t, u, search)?;
    Ok(Extremum { value: levels[LEVELS - 1] / rho, kind: ExtremumKind::Sampled })
}

/// Best sampled value of `f` after each refinement level (not normalized).
///
/// Level 0 is a 33×33 tensor grid over the box; each further level puts a
/// 33×33 grid on the box of one coarse cell around the current best point.
/// The values are running extrema, so they are monotone across levels.
pub fn sampled_extremum_levels(f: &dyn Nonlinearity, t: (f64, f64), u: (f64, f64), search: Search) -> Result<Vec<f64>> {
    let better = |a: f64, b: f64| match search {
        Search::Min => a < b,
        Search::Max => a > b,
    };
    let mut best: Option<(f64, f64, f64)> = None;
    let mut levels = Vec::with_capacity(LEVELS);
    let (mut tb, mut ub) = (t, u);
    for _ in 0..LEVELS {
        let dt = (tb.1 - tb.0) / (BASE_POINTS - 1) as f64;
        let du = (ub.1 - ub.0) / (BASE_POINTS - 1) as f64;
        for i in 0..BASE_POINTS {
            let ti = if i == BASE_POINTS - 1 { tb.1 } else { tb.0 + i as f64 * dt };
            for j in 0..BASE_POINTS {
                let uj = if j == BASE_POINTS - 1 { ub.1 } else { ub.0 + j as f64 * du };
                let v = eval_checked(f, ti, uj)?;
                if best.is_none_or(|(_, _, b)| better(v, b)) {
                    best = Some((ti, uj, v));
                }
            }
        }
        let (bt, bu, bv) = best.expect("grid is non-empty");
        levels.push(bv);
        tb = ((bt - dt).max(t.0), (bt + dt).min(t.1));
        ub = ((bu - du).max(u.0), (bu + du).min(u.1));
    }
    Ok(levels)
}
