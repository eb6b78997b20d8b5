//! `fracbvp`: constants, certificates, solutions and residual checks for the
//! nonlocal Caputo boundary value problem, driven by a TOML config.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "fracbvp", version, about = "Positive solutions of a nonlocal Caputo boundary value problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cone constants, regime report and index thresholds.
    Constants(Common),
    /// Check the index conditions and match multiplicity patterns.
    Certify(Common),
    /// Picard iteration on the Nyström discretization, then verify.
    Solve(Common),
    /// Residuals and cone membership of a solution CSV.
    Verify(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    config: PathBuf,
    /// Directory for the report (and solution) files.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, common) = match &cli.command {
        Command::Constants(c) => ("constants", c),
        Command::Certify(c) => ("certify", c),
        Command::Solve(c) => ("solve", c),
        Command::Verify(c) => ("verify", c),
    };
    match commands::run(name, &common.config, &common.out) {
        Ok(written) => {
            for path in written {
                println!("{}", path.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("fracbvp {name}: {e}");
            ExitCode::from(e.code())
        }
    }
}
