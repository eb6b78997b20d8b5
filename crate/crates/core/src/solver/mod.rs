//! Nyström discretization of `Tu = γ λ[u] + ∫ k f(·, u)`, Picard iteration
//! and residual checks against the boundary value problem.

mod nystrom;
mod oracle;
mod picard;
mod verify;

pub use nystrom::{hammerstein_apply, NystromOperator};
pub use oracle::linear_constant_oracle;
pub use picard::{picard_solve, SolveOptions, SolveReport};
pub use verify::{verify, ResidualReport, MIN_VERIFY_NODES};
