//! Positive solutions of the nonlocal Caputo boundary value problem
//!
//! ```text
//! ᶜDᵅu(t) + f(t, u(t)) = 0,   t ∈ (0, 1),   1 < α ≤ 2,
//! u'(0) + λ[u] = 0,   β ᶜD^{α-1}u(1) + u(η) = 0,
//! ```
//!
//! where `λ[u] = Λ₀ + ∫ u dΛ` is an affine Stieltjes functional. The problem is
//! rewritten as the perturbed Hammerstein equation
//!
//! ```text
//! u(t) = γ(t) λ[u] + ∫₀¹ k(t, s) f(s, u(s)) ds =: Tu(t)
//! ```
//!
//! and studied in the cone `K = { u ≥ 0 : min u ≥ c ‖u‖ }`.
//!
//! The crate is split by concern:
//!
//! - [`fraccalc`]: Gamma function, grid functions, discrete Caputo derivatives.
//! - [`model`]: problem parameters, the Stieltjes functional, nonlinearities.
//! - [`kernel`]: closed forms for `γ`, `k`, the cone constants and the Green
//!   representation of the linear problem.
//! - [`conditions`]: the index conditions and multiplicity certificates.
//! - [`solver`]: Nyström discretization of `T`, Picard iteration, residual checks.
//! - [`expr`]: a small expression language for user-supplied `f(t, u)`.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision, clippy::needless_range_loop)]

pub mod conditions;
pub mod error;
pub mod expr;
pub mod fraccalc;
pub mod kernel;
pub mod model;
pub mod reference;
pub mod solver;

pub use conditions::{
    certify, certify_checks, check_index0, check_index1, f_inf_estimate, f_sup_estimate, lambda0_for, scan_rho,
    CheckKind, CheckOptions, ExtremumKind, MultiplicityCertificate, Pattern, RhoCheck,
};
pub use error::{Error, Result};
pub use expr::{Expr, ParseError};
pub use fraccalc::{caputo_grid, caputo_power_exact, gamma, GridFunction};
pub use kernel::{cone_constants, gamma_weight, green_apply, kernel_k, row_integral, script_k, ConeConstants};
pub use model::{
    validate_regime, Atom, ExprNonlinearity, FnNonlinearity, Nonlinearity, ProblemParams, RegimeReport,
    StieltjesFunctional,
};
pub use solver::{
    hammerstein_apply, linear_constant_oracle, picard_solve, verify, NystromOperator, ResidualReport, SolveOptions,
    SolveReport, MIN_VERIFY_NODES,
};
