//! Batch CLI for the teleportation simulator.
//!
//! Subcommands: `analyze`, `teleport`, `table1`, `sweep`. Reports are JSON on
//! standard output (or `--output <path>`); diagnostics go to standard error.
//! Exit codes: 0 faithful, 2 probabilistic-but-recoverable, 3 unrecoverable,
//! 64 usage or parse error.

mod commands;
mod report;
mod scenario;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{run_analyze, run_sweep_command, run_table1, run_teleport, EXIT_USAGE};
use scenario::{parse_scenario, Scenario};

#[derive(Debug, Parser)]
#[command(
    name = "qteleport",
    version,
    about = "Qudit teleportation simulator over generally entangled channels"
)]
struct Cli {
    /// Predicate tolerance; overrides the scenario's options.tolerance.
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Skip Hilbert-Schmidt normalization of channel and measurement.
    #[arg(long, global = true)]
    raw: bool,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose the composed map of a scenario: rho, X, faithfulness, U.
    Analyze { scenario: PathBuf },
    /// Teleport the scenario's state and cross-check against the oracle.
    Teleport { scenario: PathBuf },
    /// Emit the 4x4 Bell correction table with sign annotations.
    Table1,
    /// Run a seeded randomized validation sweep.
    Sweep {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Comma-separated per-party dimensions, each in 2..=8.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        dims: Vec<usize>,
    },
}

fn load_scenario(path: &PathBuf, cli: &Cli) -> Result<Scenario, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read scenario '{}': {e}", path.display()))?;
    let mut scenario = parse_scenario(&text)?;
    if let Some(tolerance) = cli.tolerance {
        if !(tolerance.is_finite() && tolerance > 0.0) {
            return Err(format!("--tolerance must be positive, got {tolerance}"));
        }
        scenario.tolerance = tolerance;
    }
    if cli.raw {
        scenario.normalize = false;
    }
    Ok(scenario)
}

fn run(cli: &Cli) -> Result<(String, i32), String> {
    match &cli.command {
        Command::Analyze { scenario } => run_analyze(&load_scenario(scenario, cli)?),
        Command::Teleport { scenario } => run_teleport(&load_scenario(scenario, cli)?),
        Command::Table1 => Ok(run_table1()),
        Command::Sweep {
            seed,
            trials,
            dims,
        } => {
            let tolerance = cli.tolerance.unwrap_or(scenario::DEFAULT_TOLERANCE);
            if !(tolerance.is_finite() && tolerance > 0.0) {
                return Err(format!("--tolerance must be positive, got {tolerance}"));
            }
            run_sweep_command(*seed, *trials, dims, tolerance)
        }
    }
}

fn emit(cli: &Cli, report: &str) -> Result<(), String> {
    match &cli.output {
        Some(path) => std::fs::write(path, report)
            .map_err(|e| format!("cannot write report '{}': {e}", path.display())),
        None => {
            print!("{report}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Let clap print its own help/version text; everything else is a
            // usage error.
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("{e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };

    match run(&cli) {
        Ok((report, exit_code)) => {
            if let Err(message) = emit(&cli, &report) {
                eprintln!("error: {message}");
                return ExitCode::from(EXIT_USAGE as u8);
            }
            ExitCode::from(exit_code as u8)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
