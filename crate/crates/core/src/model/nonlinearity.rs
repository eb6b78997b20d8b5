use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{self, Expr};

/// A continuous nonlinearity `f : [0,1] × [0,∞) → [0,∞)`.
///
/// Implementations may provide exact extrema over boxes `[t₀,t₁] × [u₀,u₁]`;
/// the certificate machinery then uses them instead of sampling.
pub trait Nonlinearity: Send + Sync {
    fn eval(&self, t: f64, u: f64) -> f64;

    fn inf_hint(&self, _t: (f64, f64), _u: (f64, f64)) -> Option<f64> {
        None
    }

    fn sup_hint(&self, _t: (f64, f64), _u: (f64, f64)) -> Option<f64> {
        None
    }
}

/// Evaluates `f` and rejects negative or non-finite values.
pub fn eval_checked(f: &dyn Nonlinearity, t: f64, u: f64) -> Result<f64> {
    let value = f.eval(t, u);
    if !value.is_finite() {
        return Err(Error::NonFinite(format!("f({t}, {u}) = {value}")));
    }
    if value < 0.0 {
        return Err(Error::NegativeNonlinearity { t, u, value });
    }
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constant(pub f64);

impl Nonlinearity for Constant {
    fn eval(&self, _t: f64, _u: f64) -> f64 {
        self.0
    }

    fn inf_hint(&self, _t: (f64, f64), _u: (f64, f64)) -> Option<f64> {
        Some(self.0)
    }

    fn sup_hint(&self, _t: (f64, f64), _u: (f64, f64)) -> Option<f64> {
        Some(self.0)
    }
}

/// `f(t, u) = intercept + slope·u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Affine {
    pub intercept: f64,
    pub slope: f64,
}

impl Affine {
    pub fn linear(slope: f64) -> Self {
        Self { intercept: 0.0, slope }
    }
}

impl Nonlinearity for Affine {
    fn eval(&self, _t: f64, u: f64) -> f64 {
        self.intercept + self.slope * u
    }

    fn inf_hint(&self, _t: (f64, f64), u: (f64, f64)) -> Option<f64> {
        Some(self.eval(0.0, u.0).min(self.eval(0.0, u.1)))
    }

    fn sup_hint(&self, _t: (f64, f64), u: (f64, f64)) -> Option<f64> {
        Some(self.eval(0.0, u.0).max(self.eval(0.0, u.1)))
    }
}

/// Continuous piecewise-linear function of `u` alone, constant beyond the
/// outer knots.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinearInU {
    knots: Vec<f64>,
    values: Vec<f64>,
}

impl PiecewiseLinearInU {
    pub fn new(knots: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if knots.is_empty() || knots.len() != values.len() {
            return Err(Error::InvalidArgument("piecewise-linear f needs matching, non-empty knots and values".into()));
        }
        if knots.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidArgument("knots must be strictly increasing".into()));
        }
        if values.iter().any(|v| !(*v >= 0.0) || !v.is_finite()) {
            return Err(Error::InvalidArgument("piecewise-linear values must be non-negative".into()));
        }
        Ok(Self { knots, values })
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn at(&self, u: f64) -> f64 {
        let last = self.knots.len() - 1;
        if u <= self.knots[0] {
            return self.values[0];
        }
        if u >= self.knots[last] {
            return self.values[last];
        }
        let hi = self.knots.partition_point(|&k| k < u);
        let lo = hi - 1;
        let w = (u - self.knots[lo]) / (self.knots[hi] - self.knots[lo]);
        self.values[lo] * (1.0 - w) + self.values[hi] * w
    }

    fn candidates(&self, u: (f64, f64)) -> impl Iterator<Item = f64> + '_ {
        let inner = self.knots.iter().copied().filter(move |&k| k > u.0 && k < u.1);
        [u.0, u.1].into_iter().chain(inner).map(|x| self.at(x))
    }
}

impl Nonlinearity for PiecewiseLinearInU {
    fn eval(&self, _t: f64, u: f64) -> f64 {
        self.at(u)
    }

    fn inf_hint(&self, _t: (f64, f64), u: (f64, f64)) -> Option<f64> {
        self.candidates(u).reduce(f64::min)
    }

    fn sup_hint(&self, _t: (f64, f64), u: (f64, f64)) -> Option<f64> {
        self.candidates(u).reduce(f64::max)
    }
}

/// Nonlinearity given by a parsed expression in `t` and `u`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExprNonlinearity {
    source: String,
    expr: Expr,
}

impl ExprNonlinearity {
    pub fn parse(source: &str) -> Result<Self> {
        let expr = expr::parse(source)?;
        Ok(Self { source: source.to_string(), expr })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn expr(&self) -> &Expr {
        &self.expr
    }
}

impl fmt::Display for ExprNonlinearity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

impl Nonlinearity for ExprNonlinearity {
    fn eval(&self, t: f64, u: f64) -> f64 {
        self.expr.eval(t, u)
    }
}

/// Adapter for closures.
pub struct FnNonlinearity<F>(pub F);

impl<F> Nonlinearity for FnNonlinearity<F>
where
    F: Fn(f64, f64) -> f64 + Send + Sync,
{
    fn eval(&self, t: f64, u: f64) -> f64 {
        (self.0)(t, u)
    }
}
