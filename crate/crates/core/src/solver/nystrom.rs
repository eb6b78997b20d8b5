use crate::error::{Error, Result};
use crate::fraccalc::GridFunction;
use crate::kernel::{Kernel, KernelQuadrature};
use crate::model::{eval_checked, Nonlinearity, ProblemParams, StieltjesFunctional};

/// The operator `T` on a fixed uniform mesh.
#[derive(Debug, Clone)]
pub struct NystromOperator {
    kernel: Kernel,
    quadrature: KernelQuadrature,
    functional: StieltjesFunctional,
    weight: Vec<f64>,
    nodes: Vec<f64>,
}

impl NystromOperator {
    pub fn new(p: &ProblemParams, l: &StieltjesFunctional, n_nodes: usize) -> Result<Self> {
        let kernel = Kernel::new(p)?;
        let quadrature = KernelQuadrature::new(p, n_nodes)?;
        let mesh = GridFunction::uniform(n_nodes, |t| t)?;
        let nodes = mesh.into_values();
        let weight = nodes.iter().map(|&t| kernel.weight(t)).collect();
        Ok(Self { kernel, quadrature, functional: l.clone(), weight, nodes })
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn functional(&self) -> &StieltjesFunctional {
        &self.functional
    }

    /// `Tu` on the operator's mesh. `u` must be non-negative.
    pub fn apply(&self, f: &dyn Nonlinearity, u: &GridFunction) -> Result<GridFunction> {
        if u.len() != self.n_nodes() {
            return Err(Error::InvalidGrid(format!("operator built for {} nodes, got {}", self.n_nodes(), u.len())));
        }
        u.uniform_step()?;
        let g = u
            .nodes()
            .iter()
            .zip(u.values())
            .map(|(&t, &v)| {
                if !(v >= 0.0) {
                    return Err(Error::NegativeState { t, value: v });
                }
                eval_checked(f, t, v)
            })
            .collect::<Result<Vec<f64>>>()?;
        let lambda_u = self.functional.apply(u);
        let integral = self.quadrature.apply(&g);
        let values = self.weight.iter().zip(integral).map(|(w, v)| w * lambda_u + v).collect();
        u.with_values(values)
    }
}

pub fn hammerstein_apply(
    p: &ProblemParams,
    l: &StieltjesFunctional,
    f: &dyn Nonlinearity,
    u: &GridFunction,
) -> Result<GridFunction> {
    NystromOperator::new(p, l, u.len())?.apply(f, u)
}
