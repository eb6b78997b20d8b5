use serde::Serialize;

use super::index::{CheckKind, RhoCheck};

/// The six ρ-chain patterns; S1/S2 give one non-zero solution, S3/S4 two,
/// S5/S6 three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Pattern {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
}

/// Spacing between consecutive radii of a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Gap {
    /// `ρᵢ < ρᵢ₊₁`
    Plain,
    /// `ρᵢ/c < ρᵢ₊₁`
    Cone,
}

use CheckKind::{Index0 as I0, Index1 as I1};

impl Pattern {
    pub const ALL: [Pattern; 6] = [Pattern::S1, Pattern::S2, Pattern::S3, Pattern::S4, Pattern::S5, Pattern::S6];

    fn shape(self) -> (&'static [CheckKind], &'static [Gap]) {
        use Gap::{Cone, Plain};
        match self {
            Pattern::S1 => (&[I0, I1], &[Cone]),
            Pattern::S2 => (&[I1, I0], &[Plain]),
            Pattern::S3 => (&[I0, I1, I0], &[Cone, Plain]),
            Pattern::S4 => (&[I1, I0, I1], &[Plain, Cone]),
            Pattern::S5 => (&[I0, I1, I0, I1], &[Cone, Plain, Cone]),
            Pattern::S6 => (&[I1, I0, I1, I0], &[Plain, Cone, Plain]),
        }
    }

    pub fn kinds(self) -> &'static [CheckKind] {
        self.shape().0
    }

    /// Number of non-zero solutions the pattern guarantees.
    pub fn solutions(self) -> u32 {
        match self {
            Pattern::S1 | Pattern::S2 => 1,
            Pattern::S3 | Pattern::S4 => 2,
            Pattern::S5 | Pattern::S6 => 3,
        }
    }
}

/// One audited spacing inequality of a witness chain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpacingAudit {
    pub relation: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// A chain of satisfied checks realizing a pattern.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub rhos: Vec<f64>,
    pub kinds: Vec<CheckKind>,
    pub spacing: Vec<SpacingAudit>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplicityCertificate {
    pub cone_constant: f64,
    pub checks: Vec<RhoCheck>,
    pub satisfied_patterns: Vec<Pattern>,
    pub guaranteed_solutions: u32,
    pub gap_constraints: Vec<PatternWitness>,
    /// True when every extremum came from an analytic hint.
    pub rigorous: bool,
}

/// Matches every pattern against the satisfied checks.
///
/// Each spacing requirement is a strict lower bound on the next radius that
/// grows with the previous one, so picking the smallest admissible radius at
/// every step finds a chain whenever one exists.
pub fn certify_checks(checks: Vec<RhoCheck>, c: f64) -> MultiplicityCertificate {
    let mut satisfied: Vec<&RhoCheck> = checks.iter().filter(|ch| ch.satisfied).collect();
    satisfied.sort_by(|a, b| a.rho.total_cmp(&b.rho));

    let mut patterns = Vec::new();
    let mut witnesses = Vec::new();
    for pattern in Pattern::ALL {
        if let Some(chain) = find_chain(pattern, &satisfied, c) {
            patterns.push(pattern);
            witnesses.push(audit(pattern, &chain, c));
        }
    }
    let guaranteed_solutions = patterns.iter().map(|p| p.solutions()).max().unwrap_or(0);
    let rigorous = checks.iter().all(|ch| ch.f_extremum_kind == super::ExtremumKind::AnalyticHint);
    MultiplicityCertificate {
        cone_constant: c,
        checks,
        satisfied_patterns: patterns,
        guaranteed_solutions,
        gap_constraints: witnesses,
        rigorous,
    }
}

fn admissible(gap: Gap, prev: f64, next: f64, c: f64) -> bool {
    match gap {
        Gap::Plain => prev < next,
        Gap::Cone => prev / c < next,
    }
}

fn find_chain(pattern: Pattern, sorted: &[&RhoCheck], c: f64) -> Option<Vec<f64>> {
    let (kinds, gaps) = pattern.shape();
    let mut chain: Vec<f64> = Vec::with_capacity(kinds.len());
    for (i, &kind) in kinds.iter().enumerate() {
        let next = sorted.iter().find(|ch| {
            ch.kind == kind
                && match chain.last() {
                    None => true,
                    Some(&prev) => admissible(gaps[i - 1], prev, ch.rho, c),
                }
        })?;
        chain.push(next.rho);
    }
    Some(chain)
}

fn audit(pattern: Pattern, chain: &[f64], c: f64) -> PatternWitness {
    let (kinds, gaps) = pattern.shape();
    let spacing = gaps
        .iter()
        .enumerate()
        .map(|(i, &gap)| {
            let (prev, next) = (chain[i], chain[i + 1]);
            let (relation, lhs) = match gap {
                Gap::Plain => (format!("rho{} < rho{}", i + 1, i + 2), prev),
                Gap::Cone => (format!("rho{}/c < rho{}", i + 1, i + 2), prev / c),
            };
            SpacingAudit { relation, lhs, rhs: next, holds: admissible(gap, prev, next, c) }
        })
        .collect();
    PatternWitness { pattern, rhos: chain.to_vec(), kinds: kinds.to_vec(), spacing }
}
