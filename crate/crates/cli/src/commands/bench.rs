use std::io::Write;
use std::time::Instant;

use clap::Args;
use dispersion::instances::{generate, Family, GeneratorSpec};
use dispersion::solvers::DEFAULT_BUDGET;
use dispersion::verify::log_log_slope;
use dispersion::{Gamma, Method};

use super::run_solver;
use crate::error::{CliError, CliResult};
use crate::output::{algorithm_parser, family_parser, gamma_parser, num};
use crate::Status;

/// Prints `n,k,algorithm,wall_ms,cost` rows, one per size, followed by a
/// `# slope` comment with the least-squares exponent of wall time in n.
#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Instance sizes, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
    n: Vec<usize>,

    #[arg(long, default_value_t = 10)]
    k: usize,

    #[arg(long, value_parser = family_parser(), default_value = "collinear")]
    family: Family,

    #[arg(long, value_parser = gamma_parser(), default_value = "2")]
    gamma: Gamma,

    #[arg(long, short, value_parser = algorithm_parser(), default_value = "framework")]
    algorithm: Method,

    #[arg(long, default_value_t = 42)]
    seed: u64,

    #[arg(long, default_value_t = 1000.0)]
    extent: f64,

    /// Runs per size; the fastest is reported.
    #[arg(long, default_value_t = 1)]
    repeat: usize,
}

pub fn run(args: &BenchArgs, out: &mut dyn Write) -> CliResult<Status> {
    if args.n.is_empty() || args.repeat == 0 {
        return Err(CliError::Input(
            "need at least one size and one repetition".into(),
        ));
    }
    writeln!(out, "n,k,algorithm,wall_ms,cost")?;
    let mut samples = Vec::with_capacity(args.n.len());
    for &n in &args.n {
        let instance = generate(&GeneratorSpec {
            family: args.family,
            n,
            k: args.k,
            gamma: args.gamma,
            seed: args.seed,
            extent: args.extent,
        })?;
        let mut best = f64::INFINITY;
        let mut cost = f64::NAN;
        for _ in 0..args.repeat {
            let start = Instant::now();
            let solution = run_solver(&instance, args.algorithm, DEFAULT_BUDGET)?;
            best = best.min(start.elapsed().as_secs_f64());
            cost = solution.cost();
        }
        samples.push((n as f64, best));
        writeln!(
            out,
            "{n},{},{},{:.3},{}",
            args.k,
            args.algorithm,
            best * 1e3,
            num(cost)
        )?;
        out.flush()?;
    }
    let slope = log_log_slope(&samples);
    if slope.is_finite() {
        writeln!(out, "# slope {slope:.2}")?;
    }
    Ok(Status::Ok)
}
