use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use dispersion::solvers::DEFAULT_BUDGET;
use dispersion::Method;

use super::{command_echo, run_solver};
use crate::error::CliResult;
use crate::output::{algorithm_parser, digest, load_instance, num};
use crate::Status;

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Instance file.
    file: PathBuf,

    #[arg(long, short, value_parser = algorithm_parser(), default_value = "framework")]
    algorithm: Method,

    /// Largest number of k-subsets the oracle may enumerate.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

/// What one solver run produced, in a form that can be checked later: the
/// digest identifies the instance regardless of formatting.
#[derive(Debug)]
pub struct RunRecord {
    pub command: String,
    pub digest: String,
    pub algorithm: Method,
    pub indices: Vec<usize>,
    pub cost: f64,
    pub lower_bound: Option<f64>,
    pub wall_ms: f64,
}

impl fmt::Display for RunRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let indices: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        writeln!(f, "command: {}", self.command)?;
        writeln!(f, "instance_sha256: {}", self.digest)?;
        writeln!(f, "algorithm: {}", self.algorithm)?;
        writeln!(f, "indices: {}", indices.join(" "))?;
        writeln!(f, "cost: {}", num(self.cost))?;
        if let Some(lb) = self.lower_bound {
            writeln!(f, "lower_bound: {}", num(lb))?;
        }
        writeln!(f, "wall_ms: {:.3}", self.wall_ms)
    }
}

pub fn run(args: &SolveArgs, out: &mut dyn Write) -> CliResult<Status> {
    let instance = load_instance(&args.file)?;
    let start = Instant::now();
    let solution = run_solver(&instance, args.algorithm, args.budget)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let record = RunRecord {
        command: command_echo(),
        digest: digest(&instance),
        algorithm: args.algorithm,
        indices: solution.indices().to_vec(),
        cost: solution.cost(),
        lower_bound: solution.lower_bound(),
        wall_ms,
    };
    write!(out, "{record}")?;
    Ok(Status::Ok)
}
