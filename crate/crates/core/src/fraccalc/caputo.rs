//! L1/L2 discretizations of the Caputo derivative on uniform meshes.
//!
//! For order `μ ∈ (0, 1]` the first derivative is frozen per cell as a divided
//! difference (L1); for `μ ∈ (1, 2]` the second derivative is frozen per cell
//! as a centred second difference (L2). The power weight `(t - s)^{n-1-μ}` is
//! then integrated exactly over every cell, so node `j` sees
//!
//! ```text
//! D^μ u(t_j) ≈ h^{n-μ} / Γ(n-μ+1) · Σ_{k<j} [(j-k)^{n-μ} - (j-k-1)^{n-μ}] δⁿu_k
//! ```

use super::{gamma, solve_small, GridFunction};
use crate::error::{Error, Result};

/// Integer order `n` of the classical derivative inside the Caputo integral.
pub fn derivative_order(mu: f64) -> Result<usize> {
    if mu > 0.0 && mu <= 1.0 {
        Ok(1)
    } else if mu > 1.0 && mu <= 2.0 {
        Ok(2)
    } else {
        Err(Error::Domain { what: "Caputo order", value: mu })
    }
}

fn pow_or_zero(m: f64, e: f64) -> f64 {
    if m == 0.0 {
        0.0
    } else {
        m.powf(e)
    }
}

/// Weight of the cell `m` steps behind the evaluation node.
fn history_weights(cells: usize, mu: f64, n: usize, h: f64) -> Result<Vec<f64>> {
    let e = n as f64 - mu;
    let scale = h.powf(e) / gamma(e + 1.0)?;
    Ok((0..cells)
        .map(|m| {
            let m = m as f64;
            scale * (pow_or_zero(m + 1.0, e) - pow_or_zero(m, e))
        })
        .collect())
}

/// Frozen n-th derivative per cell.
fn cell_derivatives(values: &[f64], n: usize, h: f64) -> Vec<f64> {
    let cells = values.len() - 1;
    match n {
        1 => values.windows(2).map(|w| (w[1] - w[0]) / h).collect(),
        _ => (0..cells)
            .map(|k| {
                let c = k.max(1);
                (values[c + 1] - 2.0 * values[c] + values[c - 1]) / (h * h)
            })
            .collect(),
    }
}

fn check_grid(u: &GridFunction, n: usize) -> Result<f64> {
    let h = u.uniform_step()?;
    if n == 2 && u.cells() < 2 {
        return Err(Error::InvalidGrid("second differences need at least three nodes".into()));
    }
    Ok(h)
}

/// Discrete Caputo derivative of order `mu` at node index `node`.
///
/// Node 0 has no history: for `μ ≤ 1` the value there is 0, for `μ > 1` it
/// is an error.
pub fn caputo_grid(u: &GridFunction, mu: f64, node: usize) -> Result<f64> {
    let n = derivative_order(mu)?;
    let h = check_grid(u, n)?;
    if node > u.cells() {
        return Err(Error::InvalidArgument(format!("node {node} outside a mesh with {} nodes", u.len())));
    }
    if node == 0 {
        return if n == 1 { Ok(0.0) } else { Err(Error::EmptyHistory { mu }) };
    }
    let weights = history_weights(node, mu, n, h)?;
    let d = cell_derivatives(u.values(), n, h);
    Ok((0..node).map(|k| weights[node - k - 1] * d[k]).sum())
}

/// Discrete Caputo derivative at every node `1..=N`; entry `i` belongs to
/// node `i + 1`.
pub fn caputo_grid_all(u: &GridFunction, mu: f64) -> Result<Vec<f64>> {
    let n = derivative_order(mu)?;
    let h = check_grid(u, n)?;
    convolve_history(u.values(), mu, n, h)
}

fn convolve_history(values: &[f64], mu: f64, n: usize, h: f64) -> Result<Vec<f64>> {
    let cells = values.len() - 1;
    let weights = history_weights(cells, mu, n, h)?;
    let d = cell_derivatives(values, n, h);
    Ok((1..=cells).map(|j| (0..j).map(|k| weights[j - k - 1] * d[k]).sum()).collect())
}

/// Caputo derivative of order `mu` of `t^p`, evaluated at `t`.
///
/// Integer powers below the derivative order give 0. Powers above `n - 1`
/// give `Γ(p+1)/Γ(p+1-μ) t^{p-μ}`. Fractional powers below `n - 1` are
/// rejected.
pub fn caputo_power_exact(p: f64, mu: f64, t: f64) -> Result<f64> {
    let n = derivative_order(mu)?;
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::Domain { what: "evaluation point", value: t });
    }
    let is_small_integer = p >= 0.0 && p.fract() == 0.0 && p < n as f64;
    if is_small_integer {
        return Ok(0.0);
    }
    if p > (n - 1) as f64 {
        return Ok(gamma(p + 1.0)? / gamma(p + 1.0 - mu)? * t.powf(p - mu));
    }
    Err(Error::Domain { what: "power for Caputo oracle", value: p })
}

const EXPONENT_GAP: f64 = 1e-6;

/// Same as [`caputo_grid_all`], with starting weights that make the scheme
/// exact on `t^exponent` as well.
///
/// Solutions of the boundary value problem behave like `A + Bt + C t^α` near
/// the origin, so the frozen second difference in the first cells misses the
/// `t^α` part by an O(1) amount regardless of `h`. The correction adds
/// `Σ_r W_{j,r} (u_r - u_0)` for `r = 1..=m`, with weights chosen so that the
/// corrected scheme keeps every monomial the plain scheme already reproduces
/// and also reproduces `t^exponent`.
pub fn caputo_grid_corrected_all(u: &GridFunction, mu: f64, exponent: f64) -> Result<Vec<f64>> {
    let n = derivative_order(mu)?;
    let h = check_grid(u, n)?;
    let plain = convolve_history(u.values(), mu, n, h)?;

    // monomials the L1 (resp. L2) scheme is exact on, besides constants
    let kept: &[f64] = if n == 1 { &[1.0] } else { &[1.0, 2.0] };
    if exponent <= (n - 1) as f64 || kept.iter().any(|&p| (p - exponent).abs() < EXPONENT_GAP) {
        return Ok(plain);
    }
    let m = kept.len() + 1;
    if u.cells() < m {
        return Ok(plain);
    }

    let powers: Vec<f64> = kept.iter().copied().chain([exponent]).collect();
    let a = powers.iter().map(|&p| (1..=m).map(|r| (r as f64).powf(p)).collect()).collect();
    let mut rhs = vec![0.0; m];
    rhs[m - 1] = 1.0;
    let Some(shape) = solve_small(a, rhs) else {
        return Ok(plain);
    };

    let probe: Vec<f64> = u.nodes().iter().map(|&t| t.powf(exponent)).collect();
    let probe_scheme = convolve_history(&probe, mu, n, h)?;
    let values = u.values();
    let increments: Vec<f64> = (1..=m).map(|r| values[r] - values[0]).collect();
    let scale = h.powf(exponent);

    plain
        .iter()
        .zip(&probe_scheme)
        .enumerate()
        .map(|(i, (&d, &probe_d))| {
            let t = u.nodes()[i + 1];
            let miss = caputo_power_exact(exponent, mu, t)? - probe_d;
            let correction: f64 = shape.iter().zip(&increments).map(|(s, du)| s * du).sum();
            Ok(d + miss / scale * correction)
        })
        .collect()
}

/// One-sided approximation of `u'(0)`.
///
/// Without an exponent this is the second-order three-point stencil. With
/// `Some(σ)` a four-point stencil exact on `1, t, t², t^σ` is used.
pub fn slope_at_zero(u: &GridFunction, exponent: Option<f64>) -> Result<f64> {
    let h = u.uniform_step()?;
    let v = u.values();
    if u.cells() < 2 {
        return Err(Error::InvalidGrid("slope stencil needs at least three nodes".into()));
    }
    let three_point = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
    let Some(sigma) = exponent else {
        return Ok(three_point);
    };
    let degenerate = [0.0, 1.0, 2.0].iter().any(|&p| (p - sigma).abs() < EXPONENT_GAP);
    if degenerate || sigma < 0.0 || u.cells() < 3 {
        return Ok(three_point);
    }
    let a = [0.0, 1.0, 2.0, sigma]
        .iter()
        .map(|&p| (0..4).map(|r| if r == 0 { (p == 0.0) as u8 as f64 } else { (r as f64).powf(p) }).collect())
        .collect();
    let Some(c) = solve_small(a, vec![0.0, 1.0, 0.0, 0.0]) else {
        return Ok(three_point);
    };
    Ok(c.iter().zip(v).map(|(ci, vi)| ci * vi).sum::<f64>() / h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_selection() {
        assert_eq!(derivative_order(0.5).unwrap(), 1);
        assert_eq!(derivative_order(1.0).unwrap(), 1);
        assert_eq!(derivative_order(1.5).unwrap(), 2);
        assert_eq!(derivative_order(2.0).unwrap(), 2);
        assert!(derivative_order(0.0).is_err());
        assert!(derivative_order(2.5).is_err());
    }

    #[test]
    fn linear_function_has_zero_second_order_derivative() {
        let u = GridFunction::uniform(65, |t| t).unwrap();
        for j in 1..u.len() {
            assert!(caputo_grid(&u, 1.5, j).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn node_zero() {
        let u = GridFunction::uniform(9, |t| t * t).unwrap();
        assert!(matches!(caputo_grid(&u, 1.5, 0), Err(Error::EmptyHistory { .. })));
        assert_eq!(caputo_grid(&u, 0.5, 0).unwrap(), 0.0);
        assert!(caputo_grid(&u, 0.5, 9).is_err());
    }

    #[test]
    fn non_uniform_rejected() {
        let u = GridFunction::new(vec![0.0, 0.2, 0.5, 1.0], vec![0.0; 4]).unwrap();
        assert!(matches!(caputo_grid(&u, 1.5, 2), Err(Error::NonUniformMesh)));
    }

    #[test]
    fn order_one_is_backward_difference() {
        let u = GridFunction::uniform(11, |t| t * t).unwrap();
        let d = caputo_grid(&u, 1.0, 10).unwrap();
        assert!((d - (1.0 - 0.81) / 0.1).abs() < 1e-12);
    }

    #[test]
    fn single_node_matches_profile() {
        let u = GridFunction::uniform(33, |t| t.powf(1.7)).unwrap();
        let all = caputo_grid_all(&u, 1.3).unwrap();
        for j in [1, 7, 32] {
            assert!((all[j - 1] - caputo_grid(&u, 1.3, j).unwrap()).abs() < 1e-13);
        }
    }

    #[test]
    fn power_oracle_domain() {
        assert_eq!(caputo_power_exact(1.0, 1.5, 0.7).unwrap(), 0.0);
        assert_eq!(caputo_power_exact(0.0, 0.5, 0.7).unwrap(), 0.0);
        assert!(caputo_power_exact(0.5, 1.5, 0.7).is_err());
        assert!(caputo_power_exact(2.0, 1.5, 0.0).is_err());
        let g = caputo_power_exact(1.5, 1.5, 1.0).unwrap();
        assert!((g - gamma(2.5).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn corrected_scheme_reproduces_singular_power() {
        let alpha = 1.5;
        let u = GridFunction::uniform(129, |t| 2.0 - t + 3.0 * t.powf(alpha)).unwrap();
        let d = caputo_grid_corrected_all(&u, alpha, alpha).unwrap();
        let exact = 3.0 * gamma(alpha + 1.0).unwrap();
        for v in d {
            assert!((v - exact).abs() < 1e-9);
        }
        let plain = caputo_grid_all(&u, alpha).unwrap();
        assert!((plain[0] - exact).abs() > 0.5);
    }

    #[test]
    fn corrected_slope() {
        let u = GridFunction::uniform(65, |t| 1.0 - 0.7 * t + t * t + t.powf(1.5)).unwrap();
        assert!((slope_at_zero(&u, Some(1.5)).unwrap() + 0.7).abs() < 1e-11);
        assert!((slope_at_zero(&u, None).unwrap() + 0.7).abs() > 1e-3);
    }
}
