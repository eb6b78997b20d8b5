//! Index conditions on `V_ρ` / `K_ρ` and the multiplicity patterns built
//! from them.
//!
//! `(I⁰_ρ)` gives index 0 on `V_ρ = {u ∈ K : min u < ρ}` and `(I¹_ρ)` gives
//! index 1 on `K_ρ = {u ∈ K : ‖u‖ < ρ}`. Since `K_ρ ⊂ V_ρ ⊂ K_{ρ/c}`, a chain
//! of alternating conditions with the right spacing yields one, two or three
//! non-zero fixed points of `T` in the cone.

mod certificate;
mod extremum;
mod index;

pub use certificate::{certify_checks, MultiplicityCertificate, Pattern, PatternWitness, SpacingAudit};
pub use extremum::{f_inf_estimate, f_sup_estimate, sampled_extremum_levels, Extremum, ExtremumKind, Search};
pub use index::{
    certify, check_index0, check_index1, lambda0_for, scan_rho, CheckKind, CheckOptions, IndexConditions, RhoCheck,
};
