mod common;

use common::{graded_integral, kernel_oracle, weight_oracle};
use fracbvp::model::{Constant, FnNonlinearity};
use fracbvp::{
    cone_constants, hammerstein_apply, linear_constant_oracle, picard_solve, GridFunction, ProblemParams, SolveOptions,
    StieltjesFunctional,
};
use proptest::prelude::*;

fn example() -> (ProblemParams, StieltjesFunctional) {
    (ProblemParams::worked_example(), StieltjesFunctional::single_atom(0.25, 0.5).unwrap())
}

fn saturating() -> FnNonlinearity<impl Fn(f64, f64) -> f64 + Send + Sync> {
    FnNonlinearity(|_t: f64, u: f64| 1.0 + u / (1.0 + u))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn operator_maps_nonnegative_functions_into_the_cone(values in prop::collection::vec(0.0f64..10.0, 65)) {
        let (p, l) = example();
        let c = cone_constants(&p, &l).unwrap().c;
        let u = GridFunction::from_uniform_values(values).unwrap();
        let tu = hammerstein_apply(&p, &l, &saturating(), &u).unwrap();
        prop_assert!(tu.min() >= c * tu.max() - 1e-12, "min {} max {}", tu.min(), tu.max());
    }

    #[test]
    fn operator_is_monotone_for_increasing_nonlinearities(
        base in prop::collection::vec(0.0f64..5.0, 33),
        bump in prop::collection::vec(0.0f64..2.0, 33),
    ) {
        let (p, l) = example();
        let u = GridFunction::from_uniform_values(base.clone()).unwrap();
        let v = GridFunction::from_uniform_values(base.iter().zip(&bump).map(|(a, b)| a + b).collect()).unwrap();
        let tu = hammerstein_apply(&p, &l, &saturating(), &u).unwrap();
        let tv = hammerstein_apply(&p, &l, &saturating(), &v).unwrap();
        for (a, b) in tu.values().iter().zip(tv.values()) {
            prop_assert!(a <= &(b + 1e-12));
        }
    }
}

/// `Tu` at `t`, with `∫k(t,s) f(s,u(s)) ds` by graded quadrature on the
/// exact (not interpolated) integrand.
fn operator_oracle(p: &ProblemParams, u: impl Fn(f64) -> f64, f: impl Fn(f64, f64) -> f64, t: f64) -> f64 {
    let g = |s: f64| kernel_oracle(p, t, s) * f(s, u(s));
    let mut cuts = vec![0.0, t.min(p.eta), t.max(p.eta), 1.0];
    cuts.dedup();
    let integral: f64 = cuts.windows(2).map(|w| graded_integral(g, w[0], w[1])).sum();
    weight_oracle(p, t) * 0.5 * u(0.25) + integral
}

#[test]
fn nystrom_converges_to_the_continuous_operator() {
    let (p, l) = example();
    let u = |t: f64| 1.0 + t + (4.0 * t).sin().powi(2);
    let f = |_t: f64, v: f64| 1.0 + 0.5 * (3.0 * v).cos() * v;
    let errors: Vec<f64> = [17, 33, 65, 129, 257]
        .iter()
        .map(|&n| {
            let grid = GridFunction::uniform(n, u).unwrap();
            let tu = hammerstein_apply(&p, &l, &FnNonlinearity(f), &grid).unwrap();
            tu.nodes()
                .iter()
                .zip(tu.values())
                .map(|(&t, &v)| (v - operator_oracle(&p, u, f, t)).abs())
                .fold(0.0, f64::max)
        })
        .collect();
    assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
    assert!(errors[4] < 1e-3, "{errors:?}");
}

#[test]
fn constant_data_error_sits_at_round_off() {
    // exact for piecewise-linear data, so refinement cannot improve on it
    let (p, l) = example();
    for n in [9, 65, 513] {
        let oracle = linear_constant_oracle(&p, &l, 1.0, n).unwrap();
        let tu = hammerstein_apply(&p, &l, &Constant(1.0), &oracle).unwrap();
        assert!(tu.sup_distance(&oracle) < 1e-12);
    }
}

#[test]
fn picard_iterates_stay_in_the_cone() {
    let (p, l) = example();
    let c = cone_constants(&p, &l).unwrap().c;
    let u0 = GridFunction::constant(129, 0.0).unwrap();
    let r = picard_solve(&p, &l, &saturating(), &u0, SolveOptions { tol: 1e-11, max_iter: 1000 }).unwrap();
    assert!(r.converged, "{r:?}");
    assert_eq!(r.clamp_events, 0);
    let u = &r.solution;
    assert!(u.min() >= c * u.max());
    let tu = hammerstein_apply(&p, &l, &saturating(), u).unwrap();
    assert!(tu.sup_distance(u) <= 1e-11);
}
