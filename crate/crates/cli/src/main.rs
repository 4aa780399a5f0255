use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use graded_cli::pullback::{self, Which};
use graded_cli::{inspect, load_config, load_matrix, standard, verify, Overrides};
use serde::Serialize;

/// Exact graded linear algebra: forms, their groups and pullbacks.
#[derive(Debug, Parser)]
#[command(name = "graded", version)]
struct Cli {
    /// Seed for the randomized suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of random samples per suite.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Truncation length of the coefficient algebra.
    #[arg(long, global = true)]
    truncation: Option<u32>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graded dimensions, shape and subalgebra dimensions.
    Inspect { config: PathBuf },
    /// Run all identity suites; exit 1 if any check fails.
    Verify { config: PathBuf },
    /// Print a pullback (mu, tau, chi0 or theta) in canonical text form.
    Pullback {
        config: PathBuf,
        which: Which,
        /// Precompose with the projector pullback p^*.
        #[arg(long)]
        project: bool,
    },
    /// A basis in which the form is standard.
    StandardForm { config: PathBuf },
    /// Factor a degree zero orthogonal automorphism into level blocks.
    Decompose { config: PathBuf, matrix: PathBuf },
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Text => print!("{}", text()),
    }
    Ok(())
}

/// Runs the command; `Ok(false)` means a verification failure.
fn run(cli: Cli) -> Result<bool> {
    let overrides = Overrides {
        seed: cli.seed,
        samples: cli.samples,
        truncation: cli.truncation,
    };
    match cli.command {
        Command::Inspect { config } => {
            let r = inspect::inspect(&load_config(&config, overrides)?)?;
            emit(cli.format.unwrap_or(Format::Text), &r, || r.to_text())?;
        }
        Command::Verify { config } => {
            let r = verify::verify(&load_config(&config, overrides)?)?;
            emit(cli.format.unwrap_or(Format::Json), &r, || r.to_text())?;
            return Ok(r.passed);
        }
        Command::Pullback { config, which, project } => {
            let m = pullback::pullback(&load_config(&config, overrides)?, which, project)?;
            let r = pullback::report(which, project, &m);
            emit(cli.format.unwrap_or(Format::Text), &r, || m.to_string())?;
        }
        Command::StandardForm { config } => {
            let r = standard::standard_form(&load_config(&config, overrides)?)?;
            emit(cli.format.unwrap_or(Format::Json), &standard::standard_json(&r), || {
                standard::standard_text(&r)
            })?;
        }
        Command::Decompose { config, matrix } => {
            let loaded = load_config(&config, overrides)?;
            let m = load_matrix(&matrix, loaded.space.dim())?;
            let f = standard::decompose_map(&loaded, m)?;
            emit(
                cli.format.unwrap_or(Format::Json),
                &standard::factorization_json(&f),
                || standard::factorization_text(&f),
            )?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
