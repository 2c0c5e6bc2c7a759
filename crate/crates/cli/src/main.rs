//! `dispersion`: solve, verify, generate, benchmark and plot γ-dispersion
//! instances.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 invalid input or
//! flags, 3 unsupported regime or exhausted oracle budget.

mod commands;
mod error;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "dispersion",
    version,
    about = "Euclidean gamma-dispersion solvers and verification harness"
)]
struct Cli {
    /// Worker threads for parallel solvers and sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one instance file and print a run record.
    Solve(commands::solve::SolveArgs),
    /// Check ratio bounds or lemmas against the oracle; prints CSV.
    Verify(commands::verify::VerifyArgs),
    /// Generate an instance file.
    Gen(commands::gen::GenArgs),
    /// Time a solver over increasing n and fit the growth exponent.
    Bench(commands::bench::BenchArgs),
    /// Render an instance and a solution as SVG.
    Plot(commands::plot::PlotArgs),
}

/// How a successful run ended.
pub enum Status {
    Ok,
    /// Every step ran, but some check did not pass.
    ChecksFailed,
}

fn run(cli: Cli, out: &mut dyn Write) -> CliResult<Status> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Input(format!("cannot configure {threads} threads: {e}")))?;
    }
    match cli.command {
        Command::Solve(args) => commands::solve::run(&args, out),
        Command::Verify(args) => commands::verify::run(&args, out),
        Command::Gen(args) => commands::gen::run(&args, out),
        Command::Bench(args) => commands::bench::run(&args, out),
        Command::Plot(args) => commands::plot::run(&args, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out).and_then(|status| {
        out.flush()?;
        Ok(status)
    });
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::ChecksFailed) => ExitCode::from(1),
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
