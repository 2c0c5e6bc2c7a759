pub mod bench;
pub mod gen;
pub mod plot;
pub mod solve;
pub mod verify;

use dispersion::solvers::{greedy_dispersion, Framework, Oracle};
use dispersion::{Instance64, Method, Result, Solution64};

/// Runs `method`, with the framework's seed scan spread over the thread pool
/// and the oracle limited to `budget` subsets.
pub fn run_solver(instance: &Instance64, method: Method, budget: u128) -> Result<Solution64> {
    match method {
        Method::Greedy => greedy_dispersion(instance),
        Method::Framework => Framework::new().parallel(true).solve(instance),
        Method::Oracle => Oracle::with_budget(budget).solve(instance),
    }
}

/// The command line as typed, with the program name normalized.
pub fn command_echo() -> String {
    std::iter::once("dispersion".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ")
}
