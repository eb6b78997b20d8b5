//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use fracbvp::{CheckKind, ProblemParams, RhoCheck};
use rand::{rngs::StdRng, Rng};

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
/// the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * pn - pm) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// `∫_a^b g` with the substitution `s = b - (b-a) x⁴`, which flattens
/// `(b - s)^q` type endpoint behaviour at `b`, then composite Gauss-Legendre
/// in `x`.
pub fn graded_integral(g: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    if b <= a {
        return 0.0;
    }
    const PANELS: usize = 8;
    let rule = gauss_legendre(20);
    let len = b - a;
    let mut total = 0.0;
    for panel in 0..PANELS {
        let (x0, x1) = (panel as f64 / PANELS as f64, (panel + 1) as f64 / PANELS as f64);
        let half = 0.5 * (x1 - x0);
        for &(z, w) in &rule {
            let x = x0 + half * (z + 1.0);
            let s = b - len * x.powi(4);
            total += w * half * g(s) * 4.0 * len * x.powi(3);
        }
    }
    total
}

/// `γ(t)` written out directly, with the Gamma values from `statrs`.
pub fn weight_oracle(p: &ProblemParams, t: f64) -> f64 {
    p.beta / statrs::function::gamma::gamma(3.0 - p.alpha) + p.eta - t
}

pub fn kernel_oracle(p: &ProblemParams, t: f64, s: f64) -> f64 {
    let ga = statrs::function::gamma::gamma(p.alpha);
    let pos = |x: f64| if x > 0.0 { x.powf(p.alpha - 1.0) } else { 0.0 };
    p.beta + pos(p.eta - s) / ga - pos(t - s) / ga
}

/// `∫₀¹ k(t, s) ds` by graded quadrature split at the kinks `s = t, η`.
pub fn row_integral_oracle(p: &ProblemParams, t: f64) -> f64 {
    let mut cuts = vec![0.0, t.min(p.eta), t.max(p.eta), 1.0];
    cuts.dedup();
    cuts.windows(2).map(|w| graded_integral(|s| kernel_oracle(p, t, s), w[0], w[1])).sum()
}

/// Parameters drawn until they satisfy both regime inequalities.
pub fn random_regime_params(rng: &mut StdRng) -> ProblemParams {
    loop {
        let alpha = rng.random_range(1.05..=2.0);
        let beta = rng.random_range(0.05..3.0);
        let eta = rng.random_range(0.0..=1.0);
        let p = ProblemParams::new(alpha, beta, eta).unwrap();
        let ga = statrs::function::gamma::gamma(alpha);
        let g3 = statrs::function::gamma::gamma(3.0 - alpha);
        if beta * ga > (1.0 - eta).powf(alpha - 1.0) && beta > (1.0 - eta) * g3 {
            return p;
        }
    }
}

/// Every pattern as (kinds, gap is cone-spaced).
pub const PATTERN_SHAPES: [(&[CheckKind], &[bool]); 6] = {
    use CheckKind::{Index0 as I0, Index1 as I1};
    [
        (&[I0, I1], &[true]),
        (&[I1, I0], &[false]),
        (&[I0, I1, I0], &[true, false]),
        (&[I1, I0, I1], &[false, true]),
        (&[I0, I1, I0, I1], &[true, false, true]),
        (&[I1, I0, I1, I0], &[false, true, false]),
    ]
};

/// Exhaustive search over all ordered tuples of satisfied checks.
pub fn brute_force_patterns(checks: &[RhoCheck], c: f64) -> Vec<usize> {
    let sat: Vec<&RhoCheck> = checks.iter().filter(|ch| ch.satisfied).collect();
    fn extend(sat: &[&RhoCheck], kinds: &[CheckKind], cone: &[bool], c: f64, prev: Option<f64>) -> bool {
        let Some((&kind, rest)) = kinds.split_first() else {
            return true;
        };
        sat.iter().any(|ch| {
            let spaced = match prev {
                None => true,
                Some(r) => {
                    if cone[0] {
                        r / c < ch.rho
                    } else {
                        r < ch.rho
                    }
                }
            };
            let cone_rest = if prev.is_some() { &cone[1..] } else { cone };
            ch.kind == kind && spaced && extend(sat, rest, cone_rest, c, Some(ch.rho))
        })
    }
    PATTERN_SHAPES
        .iter()
        .enumerate()
        .filter(|(_, (kinds, cone))| extend(&sat, kinds, cone, c, None))
        .map(|(i, _)| i)
        .collect()
}

/// `0.1` for `u ≤ 1`, `3` for `u ≥ 2`, linear in between.
pub fn s4_scenario_nonlinearity() -> fracbvp::model::PiecewiseLinearInU {
    fracbvp::model::PiecewiseLinearInU::new(vec![1.0, 2.0], vec![0.1, 3.0]).unwrap()
}

pub const S4_CHAIN: [f64; 3] = [1.0, 2.0, 200.0];
