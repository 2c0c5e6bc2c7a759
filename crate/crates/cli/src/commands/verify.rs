use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, ValueEnum};
use dispersion::instances::{generate, Family};
use dispersion::solvers::brute_force_opt;
use dispersion::verify::{
    check_line_structure, evaluate_lemmas, evaluate_ratio, run_lemma_sweep, run_ratio_sweep_with,
    InstanceSummary, LemmaReport, RatioReport, SweepSpec,
};
use dispersion::{Gamma, Instance64, Method, Result, Solution64};
use rayon::prelude::*;

use super::run_solver;
use crate::error::{CliError, CliResult};
use crate::output::{algorithm_parser, family_parser, gamma_parser, load_instance, num};
use crate::Status;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    /// Oracle cost over algorithm cost against the proved factor.
    Ratio,
    /// Disk lemmas, corollary limits and the counting lemma on the optimum.
    Lemmas,
    /// Neighbour structure of optimal solutions on a line.
    LineStructure,
}

/// Deliberately broken solvers for exercising the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Fault {
    /// Return the first k points.
    FirstK,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["file", "sweep"])))]
pub struct VerifyArgs {
    /// Instance file to check.
    file: Option<PathBuf>,

    /// Check randomized instances of this family instead of a file.
    #[arg(long, value_parser = family_parser())]
    sweep: Option<Family>,

    #[arg(long, value_enum, default_value_t = Check::Ratio)]
    check: Check,

    /// Solver under test for `--check ratio`.
    #[arg(long, short, value_parser = algorithm_parser(), default_value = "framework")]
    algorithm: Method,

    #[arg(long, default_value_t = 100)]
    trials: usize,

    /// First generator seed; trial t uses seed + t.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    #[arg(long, value_parser = gamma_parser(), default_value = "2")]
    gamma: Gamma,

    #[arg(long, default_value_t = 6)]
    n_min: usize,

    #[arg(long, default_value_t = 12)]
    n_max: usize,

    /// Defaults to gamma + 1.
    #[arg(long)]
    k_min: Option<usize>,

    #[arg(long, default_value_t = 6)]
    k_max: usize,

    #[arg(long, default_value_t = 100.0)]
    extent: f64,

    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<Fault>,
}

impl VerifyArgs {
    fn sweep_spec(&self, family: Family) -> CliResult<SweepSpec> {
        if self.n_min > self.n_max || self.n_min == 0 {
            return Err(CliError::Input(format!(
                "invalid size range [{}, {}]",
                self.n_min, self.n_max
            )));
        }
        Ok(SweepSpec {
            family,
            n_min: self.n_min,
            n_max: self.n_max,
            k_min: self.k_min.unwrap_or(self.gamma.get() + 1),
            k_max: self.k_max,
            gamma: self.gamma,
            extent: self.extent,
            seed: self.seed,
        })
    }

    fn solver(&self) -> impl Fn(&Instance64) -> Result<Solution64> + Sync + '_ {
        move |instance| match self.inject_fault {
            Some(Fault::FirstK) => {
                Solution64::new(instance, (0..instance.k()).collect(), self.algorithm, None)
            }
            None => run_solver(
                instance,
                self.algorithm,
                dispersion::solvers::DEFAULT_BUDGET,
            ),
        }
    }
}

const RATIO_HEADER: [&str; 11] = [
    "trial",
    "n",
    "k",
    "gamma",
    "mode",
    "seed",
    "oracle_cost",
    "alg_cost",
    "ratio",
    "bound",
    "pass",
];
const LEMMA_HEADER: [&str; 13] = [
    "trial",
    "n",
    "k",
    "gamma",
    "mode",
    "seed",
    "opt_cost",
    "opt_disk",
    "corollaries",
    "counting",
    "counting_checked",
    "line_structure",
    "pass",
];
const LINE_HEADER: [&str; 9] = [
    "trial",
    "n",
    "k",
    "gamma",
    "mode",
    "seed",
    "opt_cost",
    "line_structure",
    "pass",
];

fn summary_fields(s: &InstanceSummary) -> Vec<String> {
    vec![
        s.trial.to_string(),
        s.n.to_string(),
        s.k.to_string(),
        s.gamma.to_string(),
        s.mode.to_string(),
        s.seed.map(|x| x.to_string()).unwrap_or_default(),
    ]
}

fn ratio_row(r: &RatioReport) -> Vec<String> {
    let mut row = summary_fields(&r.summary);
    row.extend([
        num(r.oracle_cost),
        num(r.alg_cost),
        num(r.ratio),
        num(r.bound),
        r.pass.to_string(),
    ]);
    row
}

fn lemma_row(r: &LemmaReport) -> Vec<String> {
    let o = &r.outcome;
    let mut row = summary_fields(&r.summary);
    row.extend([
        num(r.opt_cost),
        o.opt_disk.to_string(),
        o.corollaries.to_string(),
        o.counting.to_string(),
        o.counting_checked.to_string(),
        o.line_structure.map(|b| b.to_string()).unwrap_or_default(),
        r.pass().to_string(),
    ]);
    row
}

/// Line-structure verdict on one instance: (optimal cost, holds).
fn line_structure(instance: &Instance64) -> Result<(f64, bool)> {
    let opt = brute_force_opt(instance)?;
    Ok((opt.cost(), check_line_structure(instance, &opt)?))
}

/// Writes every successful row, then reports the first per-trial error.
fn emit<T>(
    out: &mut dyn Write,
    header: &[&str],
    results: Vec<Result<T>>,
    row: impl Fn(&T) -> Vec<String>,
    pass: impl Fn(&T) -> bool,
) -> CliResult<Status> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(header)?;
    let mut all_pass = true;
    let mut first_error = None;
    for result in results {
        match result {
            Ok(item) => {
                all_pass &= pass(&item);
                writer.write_record(row(&item))?;
            }
            Err(e) => {
                first_error.get_or_insert(e);
            }
        }
    }
    writer.flush()?;
    match (first_error, all_pass) {
        (Some(e), _) => Err(e.into()),
        (None, true) => Ok(Status::Ok),
        (None, false) => Ok(Status::ChecksFailed),
    }
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<Status> {
    match (&args.file, args.sweep) {
        (Some(path), _) => {
            let instance = load_instance(path)?;
            let summary = InstanceSummary::of(&instance, 0, None);
            match args.check {
                Check::Ratio => {
                    let report = evaluate_ratio(&instance, summary, args.algorithm, args.solver());
                    emit(out, &RATIO_HEADER, vec![report], ratio_row, |r| r.pass)
                }
                Check::Lemmas => {
                    let report = evaluate_lemmas(&instance, summary);
                    emit(
                        out,
                        &LEMMA_HEADER,
                        vec![report],
                        lemma_row,
                        LemmaReport::pass,
                    )
                }
                Check::LineStructure => {
                    let result = line_structure(&instance).map(|(c, ok)| (summary, c, ok));
                    emit(out, &LINE_HEADER, vec![result], line_row, |r| r.2)
                }
            }
        }
        (None, Some(family)) => {
            let spec = args.sweep_spec(family)?;
            match args.check {
                Check::Ratio => {
                    let reports =
                        run_ratio_sweep_with(&spec, args.trials, args.algorithm, args.solver());
                    emit(out, &RATIO_HEADER, reports, ratio_row, |r| r.pass)
                }
                Check::Lemmas => {
                    let reports = run_lemma_sweep(&spec, args.trials);
                    emit(out, &LEMMA_HEADER, reports, lemma_row, LemmaReport::pass)
                }
                Check::LineStructure => {
                    let results = (0..args.trials)
                        .into_par_iter()
                        .map(|t| {
                            let g = spec.trial(t);
                            let instance = generate(&g)?;
                            let summary = InstanceSummary::of(&instance, t, Some(g.seed));
                            line_structure(&instance).map(|(c, ok)| (summary, c, ok))
                        })
                        .collect();
                    emit(out, &LINE_HEADER, results, line_row, |r| r.2)
                }
            }
        }
        (None, None) => unreachable!("clap requires a file or --sweep"),
    }
}

fn line_row((summary, cost, ok): &(InstanceSummary, f64, bool)) -> Vec<String> {
    let mut row = summary_fields(summary);
    row.extend([num(*cost), ok.to_string(), ok.to_string()]);
    row
}
