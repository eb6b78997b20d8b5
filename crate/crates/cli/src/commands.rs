use std::fmt;
use std::path::{Path, PathBuf};

use fracbvp::conditions::IndexConditions;
use fracbvp::reference::{self, compare_thresholds, ThresholdComparison, INV_M_NOTE};
use fracbvp::{
    cone_constants, green_apply, picard_solve, validate_regime, verify, CheckOptions, ConeConstants, GridFunction,
    MultiplicityCertificate, ProblemParams, RegimeReport, ResidualReport, RhoCheck, SolveOptions, SolveReport,
    StieltjesFunctional, MIN_VERIFY_NODES,
};
use serde::Serialize;

use crate::config::{CertifyPlan, ConfigError, RunConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Regime(String),
    Numeric(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Regime(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "config error: {m}"),
            CliError::Regime(m) => write!(f, "regime error: {m}"),
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e.0)
    }
}

impl From<fracbvp::Error> for CliError {
    fn from(e: fracbvp::Error) -> Self {
        use fracbvp::Error as E;
        match e {
            E::Regime(_) | E::NonPositiveInvM(_) | E::NonInvertibleCoupling(_) => CliError::Regime(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    tool_version: &'static str,
    command: &'a str,
    config: &'a RunConfig,
    #[serde(flatten)]
    body: T,
}

fn write_json<T: Serialize>(out: &Path, command: &str, config: &RunConfig, body: T) -> Result<PathBuf> {
    let envelope =
        Envelope { schema_version: SCHEMA_VERSION, tool_version: env!("CARGO_PKG_VERSION"), command, config, body };
    let mut text = serde_json::to_string_pretty(&envelope).map_err(|e| CliError::Numeric(e.to_string()))?;
    text.push('\n');
    let path = out.join(format!("{command}.json"));
    std::fs::write(&path, text).map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}

fn write_solution_csv(path: &Path, u: &GridFunction) -> Result<()> {
    let io = |e: csv::Error| CliError::Config(format!("cannot write {}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(["t", "u"]).map_err(io)?;
    for (t, v) in u.nodes().iter().zip(u.values()) {
        w.write_record([format!("{t:.16e}"), format!("{v:.16e}")]).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}

pub fn run(command: &str, config_path: &Path, out: &Path) -> Result<Vec<PathBuf>> {
    let config = RunConfig::load(config_path)?;
    let p = config.params()?;
    let l = config.functional()?;
    if !out.is_dir() {
        return Err(CliError::Config(format!("output directory {} does not exist", out.display())));
    }
    match command {
        "constants" => constants(&config, &p, &l, out),
        "certify" => certify(&config, &p, &l, out),
        "solve" => solve(&config, &p, &l, out),
        "verify" => verify_cmd(&config, &p, &l, out),
        other => unreachable!("unknown subcommand {other}"),
    }
}

#[derive(Serialize)]
struct Thresholds {
    /// `c₂‖γ‖λ₀` at `ρ = 1`.
    index0_offset: f64,
    /// `f_{ρ,ρ/c}` must exceed this at `ρ = 1`.
    index0_threshold: f64,
    index1_coefficient: f64,
    /// `f^{0,ρ}` must stay below this at `ρ = 1`.
    index1_threshold: f64,
}

#[derive(Serialize)]
struct ConstantsBody {
    regime: RegimeReport,
    constants: ConeConstants,
    inv_m: f64,
    big_m: f64,
    coupling_ok: bool,
    thresholds: Option<Thresholds>,
    inv_big_m_note: &'static str,
    reference_comparison: Option<ThresholdComparison>,
}

fn is_worked_example(p: &ProblemParams, l: &StieltjesFunctional) -> bool {
    let (rp, rl) = reference::worked_example();
    *p == rp && l.lambda0() == rl.lambda0() && l.atoms() == rl.atoms() && l.density().is_none()
}

fn constants(config: &RunConfig, p: &ProblemParams, l: &StieltjesFunctional, out: &Path) -> Result<Vec<PathBuf>> {
    let regime = validate_regime(p)?;
    let k = cone_constants(p, l)?;
    let thresholds = if k.coupling_ok() {
        let ic = IndexConditions::new(p, l, CheckOptions::default())?;
        Some(Thresholds {
            index0_offset: ic.index0_offset(1.0)?,
            index0_threshold: ic.index0_threshold(1.0)?,
            index1_coefficient: ic.index1_coefficient()?,
            index1_threshold: ic.index1_threshold(1.0)?,
        })
    } else {
        None
    };
    let reference_comparison = if is_worked_example(p, l) { Some(compare_thresholds(p, l)?) } else { None };
    let body = ConstantsBody {
        regime,
        constants: k,
        inv_m: k.inv_m(),
        big_m: k.big_m(),
        coupling_ok: k.coupling_ok(),
        thresholds,
        inv_big_m_note: INV_M_NOTE,
        reference_comparison,
    };
    Ok(vec![write_json(out, "constants", config, body)?])
}

#[derive(Serialize)]
struct CertifyBody {
    certificate: MultiplicityCertificate,
}

#[derive(Serialize)]
struct ScanBody {
    certificate: MultiplicityCertificate,
    scanned: usize,
}

fn certify(config: &RunConfig, p: &ProblemParams, l: &StieltjesFunctional, out: &Path) -> Result<Vec<PathBuf>> {
    let f = config.nonlinearity()?;
    let plan = config.certify_plan()?;
    let options = CheckOptions { lambda0_override: config.certify.as_ref().and_then(|c| c.lambda0_override) };
    let ic = IndexConditions::new(p, l, options)?;
    let path = match plan {
        CertifyPlan::Explicit(rhos) => {
            let certificate = ic.certify(f.as_ref(), &rhos)?;
            write_json(out, "certify", config, CertifyBody { certificate })?
        }
        CertifyPlan::Scan(scan) => {
            let checks: Vec<RhoCheck> = ic.scan(f.as_ref(), scan.min, scan.max, scan.n)?;
            let certificate = fracbvp::certify_checks(checks, ic.constants().c);
            write_json(out, "certify", config, ScanBody { certificate, scanned: scan.n })?
        }
    };
    Ok(vec![path])
}

#[derive(Serialize)]
struct SolveBody {
    solve: SolveReport,
    /// Absent when the mesh is too coarse for the residual stencils.
    verification: Option<ResidualReport>,
    solution_file: String,
}

fn solve(config: &RunConfig, p: &ProblemParams, l: &StieltjesFunctional, out: &Path) -> Result<Vec<PathBuf>> {
    let f = config.nonlinearity()?;
    let s = config.solve_section()?;
    let k = cone_constants(p, l)?;
    let u0 = match (s.u0.constant, s.u0.oracle) {
        (_, Some(sigma)) => green_apply(p, l, &GridFunction::constant(s.n_nodes, sigma)?)?,
        (c, None) => GridFunction::constant(s.n_nodes, c.unwrap_or(0.0))?,
    };
    let report = picard_solve(p, l, f.as_ref(), &u0, SolveOptions { tol: s.tol, max_iter: s.max_iter })?;
    let verification = if s.n_nodes >= MIN_VERIFY_NODES && !report.diverged {
        Some(verify(p, l, f.as_ref(), &report.solution, k.c)?)
    } else {
        None
    };
    let csv_path = out.join("solution.csv");
    write_solution_csv(&csv_path, &report.solution)?;
    let body = SolveBody { solve: report, verification, solution_file: "solution.csv".into() };
    let json = write_json(out, "solve", config, body)?;
    Ok(vec![json, csv_path])
}

#[derive(Serialize)]
struct VerifyBody {
    cone_constant: f64,
    residuals: ResidualReport,
}

fn verify_cmd(config: &RunConfig, p: &ProblemParams, l: &StieltjesFunctional, out: &Path) -> Result<Vec<PathBuf>> {
    let f = config.nonlinearity()?;
    let u = config.verify_solution()?;
    if u.len() < MIN_VERIFY_NODES || !u.is_uniform() {
        return Err(CliError::Config(format!(
            "solution must be on a uniform mesh with at least {MIN_VERIFY_NODES} nodes"
        )));
    }
    let c = cone_constants(p, l)?.c;
    let residuals = verify(p, l, f.as_ref(), &u, c)?;
    Ok(vec![write_json(out, "verify", config, VerifyBody { cone_constant: c, residuals })?])
}
