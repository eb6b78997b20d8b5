//! TOML run configuration.
//!
//! ```toml
//! [problem]
//! alpha = 1.5
//! beta = 0.8
//! eta = 0.75
//!
//! [functional]            # optional; defaults to λ[u] = 0
//! lambda0 = 0.0
//! atoms = [{ xi = 0.25, weight = 0.5 }]
//! density = "w.csv"       # optional, header "s,w", uniform or not
//!
//! [f]                     # exactly one of expr / builtin
//! expr = "1 + u/(1+u)"
//! # builtin = "constant" | "linear" | "affine" | "piecewise_linear"
//! # params = [..]; knots = [..]; values = [..] for piecewise_linear
//!
//! [certify]               # exactly one of rhos / scan
//! rhos = [1.0, 2.0, 200.0]
//! # scan = { min = 0.01, max = 100.0, n = 50 }
//! # lambda0_override = 0.5
//!
//! [solve]
//! n_nodes = 1025
//! tol = 1e-10
//! max_iter = 1000
//! u0 = { constant = 0.0 } # or { oracle = 1.0 }
//!
//! [verify]
//! solution = "solution.csv"
//! ```
//!
//! Relative paths are resolved against the directory of the config file.
//! Unknown keys are rejected. Sections for other subcommands are ignored.

use std::path::{Path, PathBuf};

use fracbvp::model::{Affine, Constant, ExprNonlinearity, PiecewiseLinearInU};
use fracbvp::{Atom, CheckKind, GridFunction, Nonlinearity, ProblemParams, StieltjesFunctional};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub problem: ProblemSection,
    #[serde(default)]
    pub functional: FunctionalSection,
    pub f: Option<FSection>,
    pub certify: Option<CertifySection>,
    pub solve: Option<SolveSection>,
    pub verify: Option<VerifySection>,
}

#[derive(Debug, Clone, Copy, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSection {
    pub alpha: f64,
    pub beta: f64,
    pub eta: f64,
}

#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionalSection {
    #[serde(default)]
    pub lambda0: f64,
    #[serde(default)]
    pub atoms: Vec<AtomSection>,
    pub density: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct AtomSection {
    pub xi: f64,
    pub weight: f64,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct FSection {
    pub expr: Option<String>,
    pub builtin: Option<String>,
    pub params: Option<Vec<f64>>,
    pub knots: Option<Vec<f64>>,
    pub values: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct CertifySection {
    pub rhos: Option<Vec<f64>>,
    pub scan: Option<ScanSection>,
    pub lambda0_override: Option<f64>,
}

#[derive(Debug, Clone, Copy, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ScanSection {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SolveSection {
    #[serde(default = "default_nodes")]
    pub n_nodes: usize,
    #[serde(default = "default_tol")]
    pub tol: f64,
    #[serde(default = "default_max_iter")]
    pub max_iter: usize,
    #[serde(default)]
    pub u0: InitialGuess,
}

fn default_nodes() -> usize {
    1025
}

fn default_tol() -> f64 {
    1e-10
}

fn default_max_iter() -> usize {
    1000
}

#[derive(Debug, Clone, Copy, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InitialGuess {
    pub constant: Option<f64>,
    /// `σ`: start from the exact solution for `f ≡ σ`.
    pub oracle: Option<f64>,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct VerifySection {
    pub solution: PathBuf,
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn bad(msg: impl Into<String>) -> ConfigError {
    ConfigError(msg.into())
}

impl From<fracbvp::Error> for ConfigError {
    fn from(e: fracbvp::Error) -> Self {
        ConfigError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, ConfigError>;

impl RunConfig {
    /// Reads the file and resolves relative paths against its directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
        let mut config: RunConfig = toml::from_str(&text).map_err(|e| bad(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new(""));
        let resolve = |p: &mut PathBuf| {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        };
        if let Some(d) = config.functional.density.as_mut() {
            resolve(d);
        }
        if let Some(v) = config.verify.as_mut() {
            resolve(&mut v.solution);
        }
        Ok(config)
    }

    pub fn params(&self) -> Result<ProblemParams> {
        let ProblemSection { alpha, beta, eta } = self.problem;
        Ok(ProblemParams::new(alpha, beta, eta)?)
    }

    pub fn functional(&self) -> Result<StieltjesFunctional> {
        let fs = &self.functional;
        let atoms = fs.atoms.iter().map(|a| Atom { xi: a.xi, weight: a.weight }).collect();
        let density = fs.density.as_deref().map(read_table_s_w).transpose()?;
        Ok(StieltjesFunctional::new(fs.lambda0, atoms, density)?)
    }

    pub fn nonlinearity(&self) -> Result<Box<dyn Nonlinearity>> {
        let f = self.f.as_ref().ok_or_else(|| bad("missing [f] section"))?;
        match (&f.expr, &f.builtin) {
            (Some(src), None) => {
                if f.params.is_some() || f.knots.is_some() || f.values.is_some() {
                    return Err(bad("[f] expr takes no params, knots or values"));
                }
                Ok(Box::new(ExprNonlinearity::parse(src)?))
            }
            (None, Some(name)) => builtin(name, f),
            _ => Err(bad("[f] needs exactly one of expr or builtin")),
        }
    }

    pub fn certify_plan(&self) -> Result<CertifyPlan> {
        let c = self.certify.as_ref().ok_or_else(|| bad("missing [certify] section"))?;
        match (&c.rhos, c.scan) {
            (Some(rhos), None) => {
                if rhos.is_empty() {
                    return Err(bad("[certify] rhos is empty"));
                }
                if let Some(r) = rhos.iter().find(|r| r.is_nan() || **r <= 0.0 || r.is_infinite()) {
                    return Err(bad(format!("[certify] rho must be positive and finite, got {r}")));
                }
                let pairs = rhos.iter().flat_map(|&r| [(r, CheckKind::Index0), (r, CheckKind::Index1)]).collect();
                Ok(CertifyPlan::Explicit(pairs))
            }
            (None, Some(scan)) => {
                if !(scan.min > 0.0 && scan.min < scan.max && scan.max.is_finite()) || scan.n < 2 {
                    return Err(bad("[certify.scan] needs 0 < min < max and n ≥ 2"));
                }
                Ok(CertifyPlan::Scan(scan))
            }
            _ => Err(bad("[certify] needs exactly one of rhos or scan")),
        }
    }

    pub fn solve_section(&self) -> Result<&SolveSection> {
        let s = self.solve.as_ref().ok_or_else(|| bad("missing [solve] section"))?;
        if s.n_nodes < 3 {
            return Err(bad("[solve] n_nodes must be at least 3"));
        }
        if s.tol.is_nan() || s.tol <= 0.0 || s.max_iter == 0 {
            return Err(bad("[solve] needs tol > 0 and max_iter ≥ 1"));
        }
        match (s.u0.constant, s.u0.oracle) {
            (Some(v), None) | (None, Some(v)) if v >= 0.0 && v.is_finite() => Ok(s),
            (None, None) => Ok(s),
            _ => Err(bad("[solve] u0 needs at most one of constant or oracle, non-negative")),
        }
    }

    pub fn verify_solution(&self) -> Result<GridFunction> {
        let v = self.verify.as_ref().ok_or_else(|| bad("missing [verify] section"))?;
        read_solution(&v.solution)
    }
}

pub enum CertifyPlan {
    Explicit(Vec<(f64, CheckKind)>),
    Scan(ScanSection),
}

fn builtin(name: &str, f: &FSection) -> Result<Box<dyn Nonlinearity>> {
    let params = f.params.as_deref().unwrap_or(&[]);
    let arity = |n: usize| {
        if params.len() == n {
            Ok(())
        } else {
            Err(bad(format!("builtin {name} takes {n} params, got {}", params.len())))
        }
    };
    let nonneg = |v: f64, what: &str| {
        if v >= 0.0 && v.is_finite() {
            Ok(v)
        } else {
            Err(bad(format!("builtin {name}: {what} must be non-negative, got {v}")))
        }
    };
    if name != "piecewise_linear" && (f.knots.is_some() || f.values.is_some()) {
        return Err(bad(format!("builtin {name} takes no knots or values")));
    }
    match name {
        "constant" => {
            arity(1)?;
            Ok(Box::new(Constant(nonneg(params[0], "value")?)))
        }
        "linear" => {
            arity(1)?;
            Ok(Box::new(Affine::linear(nonneg(params[0], "slope")?)))
        }
        "affine" => {
            arity(2)?;
            Ok(Box::new(Affine { intercept: nonneg(params[0], "intercept")?, slope: nonneg(params[1], "slope")? }))
        }
        "piecewise_linear" => {
            if f.params.is_some() {
                return Err(bad("builtin piecewise_linear takes knots and values, not params"));
            }
            let knots = f.knots.clone().ok_or_else(|| bad("piecewise_linear needs knots"))?;
            let values = f.values.clone().ok_or_else(|| bad("piecewise_linear needs values"))?;
            Ok(Box::new(PiecewiseLinearInU::new(knots, values)?))
        }
        other => Err(bad(format!("unknown builtin {other:?}"))),
    }
}

fn read_columns(path: &Path, first: &str, second: &str) -> Result<(Vec<f64>, Vec<f64>)> {
    let context = |e: &dyn std::fmt::Display| bad(format!("{}: {e}", path.display()));
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_path(path).map_err(|e| context(&e))?;
    let headers = reader.headers().map_err(|e| context(&e))?;
    if headers.len() != 2 || &headers[0] != first || &headers[1] != second {
        return Err(context(&format!("expected header \"{first},{second}\"")));
    }
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for record in reader.records() {
        let record = record.map_err(|e| context(&e))?;
        let parse = |i: usize| {
            record[i]
                .parse::<f64>()
                .map_err(|e| context(&format!("line {:?}: {e}", record.position().map(|p| p.line()))))
        };
        xs.push(parse(0)?);
        ys.push(parse(1)?);
    }
    Ok((xs, ys))
}

fn read_table_s_w(path: &Path) -> Result<GridFunction> {
    let (s, w) = read_columns(path, "s", "w")?;
    Ok(GridFunction::new(s, w)?)
}

pub fn read_solution(path: &Path) -> Result<GridFunction> {
    let (t, u) = read_columns(path, "t", "u")?;
    Ok(GridFunction::new(t, u)?)
}
