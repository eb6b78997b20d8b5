use thiserror::Error;

use crate::expr::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("mesh is not uniform")]
    NonUniformMesh,

    #[error("derivative history is empty at node 0 for order {mu}")]
    EmptyHistory { mu: f64 },

    #[error("parameters outside the positive regime: {0}")]
    Regime(String),

    #[error("1/M = {0} is not positive (need βΓ(α+1) + η^α > 1)")]
    NonPositiveInvM(f64),

    #[error("λ̃[γ] = {0} ≥ 1, the nonlocal coupling is not invertible")]
    NonInvertibleCoupling(f64),

    #[error("nonlinearity is negative at (t={t}, u={u}): {value}")]
    NegativeNonlinearity { t: f64, u: f64, value: f64 },

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("state is negative at t={t}: {value}")]
    NegativeState { t: f64, value: f64 },

    #[error(transparent)]
    Parse(#[from] ParseError),
}
