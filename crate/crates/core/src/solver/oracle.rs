use crate::error::{Error, Result};
use crate::fraccalc::GridFunction;
use crate::kernel::Kernel;
use crate::model::{ProblemParams, StieltjesFunctional};

/// Exact solution for `f ≡ σ` and a functional with at most one atom.
///
/// With `λ[u] = Λ₀ + λ u(ξ)` the representation reduces to one scalar
/// unknown, `u(ξ) = (γ(ξ)Λ₀ + σ R(ξ)) / (1 - λγ(ξ))`, where `R` is the row
/// integral of the kernel.
pub fn linear_constant_oracle(
    p: &ProblemParams,
    l: &StieltjesFunctional,
    sigma: f64,
    n_nodes: usize,
) -> Result<GridFunction> {
    if l.density().is_some() || l.atoms().len() > 1 {
        return Err(Error::InvalidArgument("the constant-data oracle needs at most one atom and no density".into()));
    }
    if !(sigma >= 0.0) || !sigma.is_finite() {
        return Err(Error::Domain { what: "sigma", value: sigma });
    }
    let kernel = Kernel::new(p)?;
    let (xi, weight) = l.atoms().first().map_or((0.0, 0.0), |a| (a.xi, a.weight));
    let coupling = weight * kernel.weight(xi);
    if coupling >= 1.0 {
        return Err(Error::NonInvertibleCoupling(coupling));
    }
    let u_xi = (kernel.weight(xi) * l.lambda0() + sigma * kernel.row_integral(xi)) / (1.0 - coupling);
    let lambda_u = l.lambda0() + weight * u_xi;
    GridFunction::uniform(n_nodes, |t| kernel.weight(t) * lambda_u + sigma * kernel.row_integral(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_data() {
        let p = ProblemParams::worked_example();
        let l = StieltjesFunctional::single_atom(0.25, 0.5).unwrap();
        let u = linear_constant_oracle(&p, &l, 0.0, 17).unwrap();
        assert_eq!(u.sup_norm(), 0.0);
    }

    #[test]
    fn worked_example_value() {
        let p = ProblemParams::worked_example();
        let l = StieltjesFunctional::single_atom(0.25, 0.5).unwrap();
        let u = linear_constant_oracle(&p, &l, 1.0, 5).unwrap();
        // node 1 is t = 0.25
        assert!((u.values()[1] - 3.999_924_935_116_891_5).abs() < 1e-12);
        assert!((u.values()[0] - 4.593_947_149_264_462).abs() < 1e-12);
        assert!((u.values()[4] - 1.841_731_903_642_341_5).abs() < 1e-12);
    }

    #[test]
    fn rejections() {
        let p = ProblemParams::worked_example();
        let two = StieltjesFunctional::new(
            0.0,
            vec![crate::model::Atom { xi: 0.1, weight: 0.1 }, crate::model::Atom { xi: 0.2, weight: 0.1 }],
            None,
        )
        .unwrap();
        assert!(linear_constant_oracle(&p, &two, 1.0, 9).is_err());
        let strong = StieltjesFunctional::single_atom(0.25, 1.0).unwrap();
        assert!(matches!(linear_constant_oracle(&p, &strong, 1.0, 9), Err(Error::NonInvertibleCoupling(_))));
    }
}
