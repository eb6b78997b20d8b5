use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraccalc::GridFunction;

/// Point mass of the Stieltjes measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Atom {
    pub xi: f64,
    pub weight: f64,
}

/// The affine functional `λ[u] = Λ₀ + Σ λᵢ u(ξᵢ) + ∫ w(s) u(s) ds` with a
/// positive measure.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct StieltjesFunctional {
    lambda0: f64,
    atoms: Vec<Atom>,
    density: Option<GridFunction>,
}

impl StieltjesFunctional {
    pub fn new(lambda0: f64, atoms: Vec<Atom>, density: Option<GridFunction>) -> Result<Self> {
        if !(lambda0 >= 0.0) || !lambda0.is_finite() {
            return Err(Error::Domain { what: "lambda0", value: lambda0 });
        }
        for a in &atoms {
            if !(0.0..=1.0).contains(&a.xi) {
                return Err(Error::Domain { what: "atom location", value: a.xi });
            }
            if !(a.weight > 0.0) || !a.weight.is_finite() {
                return Err(Error::Domain { what: "atom weight", value: a.weight });
            }
        }
        if let Some(w) = &density {
            if let Some(&bad) = w.values().iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
                return Err(Error::Domain { what: "density value", value: bad });
            }
        }
        Ok(Self { lambda0, atoms, density })
    }

    /// `λ[u] = λ u(ξ)`.
    pub fn single_atom(xi: f64, weight: f64) -> Result<Self> {
        Self::new(0.0, vec![Atom { xi, weight }], None)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn density(&self) -> Option<&GridFunction> {
        self.density.as_ref()
    }

    pub fn with_lambda0(mut self, lambda0: f64) -> Result<Self> {
        self.lambda0 = lambda0;
        Self::new(self.lambda0, self.atoms, self.density)
    }

    /// `Λ₀ + ∫ u dΛ`, atoms by linear interpolation, density by trapezoid.
    pub fn apply(&self, u: &GridFunction) -> f64 {
        self.lambda0 + self.measure_of(|t| u.interpolate(t))
    }

    /// `∫ g dΛ` for a pointwise-defined `g`; the density part uses the
    /// trapezoid rule on the density's nodes.
    pub fn measure_of(&self, mut g: impl FnMut(f64) -> f64) -> f64 {
        let atoms: f64 = self.atoms.iter().map(|a| a.weight * g(a.xi)).sum();
        let dens = match &self.density {
            Some(w) => w.map(|s, ws| ws * g(s)).trapezoid(),
            None => 0.0,
        };
        atoms + dens
    }

    /// `Λ₁ = ∫ dΛ`.
    pub fn total_variation(&self) -> f64 {
        self.measure_of(|_| 1.0)
    }

    pub fn has_measure(&self) -> bool {
        !self.atoms.is_empty() || self.density.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_on_unit_function() {
        let l = StieltjesFunctional::single_atom(0.25, 0.5).unwrap();
        let one = GridFunction::constant(9, 1.0).unwrap();
        assert_eq!(l.apply(&one), 0.5);
        assert_eq!(l.total_variation(), 0.5);
    }

    #[test]
    fn constant_term_only() {
        let l = StieltjesFunctional::new(0.3, vec![], None).unwrap();
        let u = GridFunction::uniform(5, |t| t.sin()).unwrap();
        assert_eq!(l.apply(&u), 0.3);
    }

    #[test]
    fn density_integral() {
        let w = GridFunction::constant(101, 1.0).unwrap();
        let l = StieltjesFunctional::new(0.0, vec![], Some(w)).unwrap();
        let u = GridFunction::uniform(101, |t| t).unwrap();
        assert!((l.apply(&u) - 0.5).abs() < 1e-12);

        let w2 = GridFunction::constant(11, 2.0).unwrap();
        let l2 = StieltjesFunctional::new(0.0, vec![], Some(w2)).unwrap();
        assert!((l2.total_variation() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn empty_functional() {
        assert_eq!(StieltjesFunctional::empty().total_variation(), 0.0);
    }

    #[test]
    fn interpolates_between_nodes() {
        let l = StieltjesFunctional::single_atom(0.3, 2.0).unwrap();
        let u = GridFunction::uniform(3, |t| t * t).unwrap();
        // nodes 0, 0.5, 1 with values 0, 0.25, 1
        assert!((l.apply(&u) - 2.0 * 0.15).abs() < 1e-15);
    }

    #[test]
    fn validation() {
        assert!(StieltjesFunctional::new(-0.1, vec![], None).is_err());
        assert!(StieltjesFunctional::single_atom(1.5, 1.0).is_err());
        assert!(StieltjesFunctional::single_atom(0.5, 0.0).is_err());
        let neg = GridFunction::uniform(3, |t| t - 0.5).unwrap();
        assert!(StieltjesFunctional::new(0.0, vec![], Some(neg)).is_err());
    }
}
