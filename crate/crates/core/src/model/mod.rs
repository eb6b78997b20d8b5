//! Problem data: parameters, the nonlocal functional `λ[·]` and the
//! nonlinearity `f`.

mod functional;
mod nonlinearity;
mod params;

pub use functional::{Atom, StieltjesFunctional};
pub use nonlinearity::{
    eval_checked, Affine, Constant, ExprNonlinearity, FnNonlinearity, Nonlinearity, PiecewiseLinearInU,
};
pub use params::{validate_regime, ProblemParams, RegimeReport};
