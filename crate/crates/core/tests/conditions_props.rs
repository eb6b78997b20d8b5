mod common;

use common::brute_force_patterns;
use fracbvp::conditions::{sampled_extremum_levels, IndexConditions, Search};
use fracbvp::model::{Constant, FnNonlinearity};
use fracbvp::{
    certify_checks, f_inf_estimate, f_sup_estimate, scan_rho, CheckKind, CheckOptions, ExtremumKind, Pattern,
    ProblemParams, RhoCheck, StieltjesFunctional,
};
use proptest::prelude::*;

fn example() -> (ProblemParams, StieltjesFunctional) {
    (ProblemParams::worked_example(), StieltjesFunctional::single_atom(0.25, 0.5).unwrap())
}

fn brute_force(f: impl Fn(f64, f64) -> f64, t: (f64, f64), u: (f64, f64), min: bool) -> f64 {
    let n = 1000;
    let mut best = if min { f64::INFINITY } else { f64::NEG_INFINITY };
    for i in 0..n {
        let ti = t.0 + (t.1 - t.0) * i as f64 / (n - 1) as f64;
        for j in 0..n {
            let uj = u.0 + (u.1 - u.0) * j as f64 / (n - 1) as f64;
            let v = f(ti, uj);
            best = if min { best.min(v) } else { best.max(v) };
        }
    }
    best
}

#[test]
fn sampled_extrema_agree_with_dense_brute_force() {
    let g = |t: f64, u: f64| 1.5 + (5.0 * t).sin() * (u / 3.0).cos() + 0.1 * u;
    let f = FnNonlinearity(g);
    let (rho, c) = (2.0, 0.4);
    let inf = f_inf_estimate(&f, rho, c).unwrap();
    let sup = f_sup_estimate(&f, rho).unwrap();
    assert_eq!(inf.kind, ExtremumKind::Sampled);
    let brute_inf = brute_force(g, (0.0, 1.0), (rho, rho / c), true) / rho;
    let brute_sup = brute_force(g, (0.0, 1.0), (0.0, rho), false) / rho;
    assert!((inf.value - brute_inf).abs() < 1e-4, "{} vs {brute_inf}", inf.value);
    assert!((sup.value - brute_sup).abs() < 1e-4, "{} vs {brute_sup}", sup.value);

    let mins = sampled_extremum_levels(&f, (0.0, 1.0), (rho, rho / c), Search::Min).unwrap();
    assert!(mins.windows(2).all(|w| w[1] <= w[0]));
    let maxs = sampled_extremum_levels(&f, (0.0, 1.0), (0.0, rho), Search::Max).unwrap();
    assert!(maxs.windows(2).all(|w| w[1] >= w[0]));
}

#[test]
fn constant_nonlinearity_scan_matches_closed_form_thresholds() {
    let (p, l) = example();
    let kappa = 0.7;
    let ic = IndexConditions::new(&p, &l, CheckOptions::default()).unwrap();
    let k = *ic.constants();
    let offset = ic.index0_offset(1.0).unwrap();
    let coefficient = ic.index1_coefficient().unwrap();
    let checks = scan_rho(&p, &l, &Constant(kappa), 0.01, 100.0, 201, CheckOptions::default()).unwrap();
    assert_eq!(checks.len(), 402);
    for pair in checks.chunks(2) {
        let (i0, i1) = (pair[0], pair[1]);
        assert_eq!((i0.kind, i1.kind), (CheckKind::Index0, CheckKind::Index1));
        assert_eq!(i0.rho, i1.rho);
        let rho = i0.rho;
        assert_eq!(i0.satisfied, offset + kappa / rho * k.inv_big_m > 1.0, "rho = {rho}");
        assert_eq!(i1.satisfied, coefficient * kappa / rho < 1.0, "rho = {rho}");
        assert_eq!(i0.f_extremum_kind, ExtremumKind::AnalyticHint);
    }
    // small ρ: index 0 only, large ρ: index 1 only
    assert!(checks[0].satisfied && !checks[1].satisfied);
    assert!(!checks[400].satisfied && checks[401].satisfied);
}

fn synthetic_checks() -> impl Strategy<Value = (Vec<RhoCheck>, f64)> {
    let check = (-3.0f64..3.0, any::<bool>(), prop::bool::weighted(0.7)).prop_map(|(log_rho, k, sat)| RhoCheck {
        rho: 10f64.powf(log_rho),
        kind: if k { CheckKind::Index0 } else { CheckKind::Index1 },
        lhs: 0.0,
        satisfied: sat,
        f_extremum: 0.0,
        f_extremum_kind: ExtremumKind::Sampled,
        lambda0: None,
    });
    (prop::collection::vec(check, 0..9), 0.05f64..0.95)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn certificate_matches_exhaustive_enumeration((checks, c) in synthetic_checks()) {
        let expected: Vec<Pattern> = brute_force_patterns(&checks, c).into_iter().map(|i| Pattern::ALL[i]).collect();
        let cert = certify_checks(checks, c);
        prop_assert_eq!(&cert.satisfied_patterns, &expected);
        let solutions = expected.iter().map(|p| p.solutions()).max().unwrap_or(0);
        prop_assert_eq!(cert.guaranteed_solutions, solutions);
        for w in &cert.gap_constraints {
            prop_assert!(w.spacing.iter().all(|s| s.holds));
            prop_assert_eq!(w.kinds.as_slice(), w.pattern.kinds());
        }
    }
}
