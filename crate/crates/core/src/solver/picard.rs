use serde::Serialize;

use super::nystrom::NystromOperator;
use crate::error::{Error, Result};
use crate::fraccalc::GridFunction;
use crate::model::{Nonlinearity, ProblemParams, StieltjesFunctional};

const BLOW_UP: f64 = 1e100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolveOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { tol: 1e-10, max_iter: 500 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    #[serde(skip)]
    pub solution: GridFunction,
    /// Number of applications of `T`.
    pub iterations: usize,
    /// `‖u - Tu‖∞` for the returned `u`.
    pub residual_fixed_point: f64,
    pub converged: bool,
    /// Iterates exceeded 1e100 in sup-norm and the run was stopped.
    pub diverged: bool,
    /// Total number of nodes where `Tu < 0` was clamped to 0.
    pub clamp_events: usize,
}

/// Picard iteration `u ← max(Tu, 0)` from `u0`.
///
/// Stops when `‖u - Tu‖∞ ≤ tol`, after `max_iter` applications, or when the
/// iterates blow up. Failing to converge is reported, not an error.
pub fn picard_solve(
    p: &ProblemParams,
    l: &StieltjesFunctional,
    f: &dyn Nonlinearity,
    u0: &GridFunction,
    options: SolveOptions,
) -> Result<SolveReport> {
    let op = NystromOperator::new(p, l, u0.len())?;
    picard_with(&op, f, u0, options)
}

pub(crate) fn picard_with(
    op: &NystromOperator,
    f: &dyn Nonlinearity,
    u0: &GridFunction,
    options: SolveOptions,
) -> Result<SolveReport> {
    if !(options.tol > 0.0) {
        return Err(Error::Domain { what: "tolerance", value: options.tol });
    }
    let mut u = u0.clone();
    let mut clamp_events = 0;
    let mut residual = f64::INFINITY;
    for iteration in 1..=options.max_iter {
        let tu = op.apply(f, &u)?;
        residual = u.sup_distance(&tu);
        if !residual.is_finite() {
            return Err(Error::NonFinite(format!("Picard residual at iteration {iteration}")));
        }
        if residual <= options.tol {
            return Ok(SolveReport {
                solution: u,
                iterations: iteration,
                residual_fixed_point: residual,
                converged: true,
                diverged: false,
                clamp_events,
            });
        }
        clamp_events += tu.values().iter().filter(|v| **v < 0.0).count();
        u = tu.map(|_, v| v.max(0.0));
        if u.sup_norm() > BLOW_UP {
            return Ok(SolveReport {
                solution: u,
                iterations: iteration,
                residual_fixed_point: residual,
                converged: false,
                diverged: true,
                clamp_events,
            });
        }
    }
    Ok(SolveReport {
        solution: u,
        iterations: options.max_iter,
        residual_fixed_point: residual,
        converged: false,
        diverged: false,
        clamp_events,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Affine, Constant};
    use crate::solver::linear_constant_oracle;

    fn example() -> (ProblemParams, StieltjesFunctional) {
        (ProblemParams::worked_example(), StieltjesFunctional::single_atom(0.25, 0.5).unwrap())
    }

    #[test]
    fn zero_problem_converges_immediately() {
        let p = ProblemParams::worked_example();
        let u0 = GridFunction::constant(33, 0.0).unwrap();
        let r = picard_solve(&p, &StieltjesFunctional::empty(), &Constant(0.0), &u0, SolveOptions::default()).unwrap();
        assert!(r.converged);
        assert_eq!(r.iterations, 1);
        assert_eq!(r.solution.sup_norm(), 0.0);
    }

    #[test]
    fn constant_nonlinearity_matches_oracle() {
        let (p, l) = example();
        let u0 = GridFunction::constant(129, 0.0).unwrap();
        let r = picard_solve(&p, &l, &Constant(1.0), &u0, SolveOptions { tol: 1e-12, max_iter: 500 }).unwrap();
        assert!(r.converged);
        assert!(r.residual_fixed_point <= 1e-12);
        let oracle = linear_constant_oracle(&p, &l, 1.0, 129).unwrap();
        assert!(r.solution.sup_distance(&oracle) < 1e-10);
    }

    #[test]
    fn strong_linear_growth_is_reported() {
        let (p, l) = example();
        let u0 = GridFunction::constant(33, 1.0).unwrap();
        let r = picard_solve(&p, &l, &Affine::linear(100.0), &u0, SolveOptions::default()).unwrap();
        assert!(!r.converged);
        assert!(r.diverged);
    }

    #[test]
    fn max_iter_reached() {
        let (p, l) = example();
        let u0 = GridFunction::constant(33, 0.0).unwrap();
        let r = picard_solve(&p, &l, &Constant(1.0), &u0, SolveOptions { tol: 1e-14, max_iter: 3 }).unwrap();
        assert!(!r.converged);
        assert_eq!(r.iterations, 3);
        assert!(r.residual_fixed_point > 1e-14);
    }

    #[test]
    fn rejects_bad_tolerance() {
        let (p, l) = example();
        let u0 = GridFunction::constant(9, 0.0).unwrap();
        assert!(picard_solve(&p, &l, &Constant(1.0), &u0, SolveOptions { tol: 0.0, max_iter: 3 }).is_err());
    }
}
