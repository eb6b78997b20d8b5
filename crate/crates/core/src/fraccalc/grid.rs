use serde::Serialize;

use crate::error::{Error, Result};

const UNIFORM_TOL: f64 = 1e-12;

/// Values of a function on a mesh of `[0, 1]`.
///
/// Nodes are strictly increasing, start at 0 and end at 1. At least two
/// nodes are required.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridFunction {
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::InvalidGrid(format!("{} nodes but {} values", nodes.len(), values.len())));
        }
        if nodes.len() < 2 {
            return Err(Error::InvalidGrid("need at least two nodes".into()));
        }
        if nodes[0] != 0.0 || nodes[nodes.len() - 1] != 1.0 {
            return Err(Error::InvalidGrid("mesh must start at 0 and end at 1".into()));
        }
        if nodes.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidGrid("nodes must be strictly increasing".into()));
        }
        Ok(Self { nodes, values })
    }

    /// Samples `f` on the uniform mesh with `n_nodes` nodes.
    pub fn uniform(n_nodes: usize, f: impl FnMut(f64) -> f64) -> Result<Self> {
        let nodes = uniform_nodes(n_nodes)?;
        let values = nodes.iter().copied().map(f).collect();
        Ok(Self { nodes, values })
    }

    /// Wraps `values` as samples on the uniform mesh with `values.len()` nodes.
    pub fn from_uniform_values(values: Vec<f64>) -> Result<Self> {
        let nodes = uniform_nodes(values.len())?;
        Ok(Self { nodes, values })
    }

    pub fn constant(n_nodes: usize, value: f64) -> Result<Self> {
        Self::uniform(n_nodes, |_| value)
    }

    /// New grid function on the same mesh.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        Self::new(self.nodes.clone(), values)
    }

    pub fn map(&self, mut f: impl FnMut(f64, f64) -> f64) -> Self {
        let values = self.nodes.iter().zip(&self.values).map(|(&t, &v)| f(t, v)).collect();
        Self { nodes: self.nodes.clone(), values }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of cells.
    pub fn cells(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_uniform(&self) -> bool {
        let n = self.cells() as f64;
        self.nodes.iter().enumerate().all(|(i, &t)| (t - i as f64 / n).abs() <= UNIFORM_TOL)
    }

    /// Mesh width, or an error when the mesh is not uniform.
    pub fn uniform_step(&self) -> Result<f64> {
        if self.is_uniform() {
            Ok(1.0 / self.cells() as f64)
        } else {
            Err(Error::NonUniformMesh)
        }
    }

    /// Piecewise-linear interpolation; `x` is clamped to `[0, 1]`.
    pub fn interpolate(&self, x: f64) -> f64 {
        let x = x.clamp(0.0, 1.0);
        let hi = self.nodes.partition_point(|&t| t < x).clamp(1, self.cells());
        let lo = hi - 1;
        let (t0, t1) = (self.nodes[lo], self.nodes[hi]);
        let w = (x - t0) / (t1 - t0);
        self.values[lo] * (1.0 - w) + self.values[hi] * w
    }

    /// Composite trapezoid rule over `[0, 1]`.
    pub fn trapezoid(&self) -> f64 {
        self.nodes.windows(2).zip(self.values.windows(2)).map(|(t, v)| 0.5 * (t[1] - t[0]) * (v[0] + v[1])).sum()
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Sup-norm distance to another grid function on the same number of nodes.
    pub fn sup_distance(&self, other: &GridFunction) -> f64 {
        self.values.iter().zip(&other.values).fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }
}

fn uniform_nodes(n_nodes: usize) -> Result<Vec<f64>> {
    if n_nodes < 2 {
        return Err(Error::InvalidGrid("need at least two nodes".into()));
    }
    let n = (n_nodes - 1) as f64;
    Ok((0..n_nodes).map(|i| i as f64 / n).collect())
}
