use super::Kernel;
use crate::error::{Error, Result};
use crate::model::ProblemParams;

/// Product quadrature for `y ↦ ∫₀¹ k(t_i, s) y(s) ds` on a uniform mesh.
///
/// `y` is interpolated linearly and the power terms of the kernel are
/// integrated exactly against each hat function. The `(t_i - s)₊` part only
/// depends on `i - k`, so it is stored as one table of cell moments.
#[derive(Debug, Clone)]
pub struct KernelQuadrature {
    beta: f64,
    h: f64,
    // ∫ (η - s)₊^{α-1} φ_j(s) ds / Γ(α)
    ahead: Vec<f64>,
    // cell m steps behind the target: (coefficient of the far node, of the near node)
    behind: Vec<(f64, f64)>,
}

impl KernelQuadrature {
    pub fn new(params: &ProblemParams, n_nodes: usize) -> Result<Self> {
        if n_nodes < 2 {
            return Err(Error::InvalidGrid("need at least two nodes".into()));
        }
        let kernel = Kernel::new(params)?;
        let cells = n_nodes - 1;
        let h = 1.0 / cells as f64;
        let p = params.alpha - 1.0;
        let inv_gamma = 1.0 / kernel.gamma_alpha();

        let mut ahead = vec![0.0; n_nodes];
        for k in 0..cells {
            let (a, b) = (k as f64 * h, (k + 1) as f64 * h);
            let (left, right) = cell_moments(params.eta, a, b, p);
            ahead[k] += left * inv_gamma;
            ahead[k + 1] += right * inv_gamma;
        }

        let scale = h.powf(p + 1.0) * inv_gamma;
        let behind = (0..cells)
            .map(|m| {
                let m = m as f64;
                let a = (pow(m + 1.0, p + 1.0) - pow(m, p + 1.0)) / (p + 1.0);
                let b = (pow(m + 1.0, p + 2.0) - pow(m, p + 2.0)) / (p + 2.0);
                (scale * (b - m * a), scale * ((m + 1.0) * a - b))
            })
            .collect();

        Ok(Self { beta: params.beta, h, ahead, behind })
    }

    pub fn n_nodes(&self) -> usize {
        self.ahead.len()
    }

    /// Value of the integral at node `i`.
    pub fn apply_at(&self, y: &[f64], i: usize) -> f64 {
        let trapezoid = self.h * (y.iter().sum::<f64>() - 0.5 * (y[0] + y[y.len() - 1]));
        self.row(y, i, self.beta * trapezoid + self.ahead_term(y))
    }

    pub fn apply(&self, y: &[f64]) -> Vec<f64> {
        assert_eq!(y.len(), self.n_nodes(), "grid size mismatch");
        let trapezoid = self.h * (y.iter().sum::<f64>() - 0.5 * (y[0] + y[y.len() - 1]));
        let common = self.beta * trapezoid + self.ahead_term(y);
        (0..y.len()).map(|i| self.row(y, i, common)).collect()
    }

    fn ahead_term(&self, y: &[f64]) -> f64 {
        self.ahead.iter().zip(y).map(|(w, v)| w * v).sum()
    }

    fn row(&self, y: &[f64], i: usize, common: f64) -> f64 {
        let history: f64 =
            self.behind[..i].iter().enumerate().map(|(m, &(far, near))| far * y[i - 1 - m] + near * y[i - m]).sum();
        common - history
    }
}

fn pow(x: f64, e: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.powf(e)
    }
}

/// `(∫ (c-s)₊^p (b-s)/h ds, ∫ (c-s)₊^p (s-a)/h ds)` over the cell `[a, b]`.
fn cell_moments(c: f64, a: f64, b: f64, p: f64) -> (f64, f64) {
    if c <= a {
        return (0.0, 0.0);
    }
    let h = b - a;
    let x0 = c - b.min(c);
    let x1 = c - a;
    let i0 = (pow(x1, p + 1.0) - pow(x0, p + 1.0)) / (p + 1.0);
    let i1 = (pow(x1, p + 2.0) - pow(x0, p + 2.0)) / (p + 2.0);
    (((b - c) * i0 + i1) / h, ((c - a) * i0 - i1) / h)
}
