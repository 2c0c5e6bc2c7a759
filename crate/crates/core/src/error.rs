use crate::geometry::{Gamma, Mode};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("need {needed} other points for the cost, only {available} available")]
    TooFewNeighbors { needed: usize, available: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("unsupported regime: gamma = {gamma} in {mode} mode")]
    UnsupportedRegime { gamma: Gamma, mode: Mode },

    #[error("no seed could be grown to a full solution")]
    NoSolution,

    #[error("enumeration needs {subsets} subsets, budget is {budget}")]
    BudgetExceeded { subsets: u128, budget: u128 },

    #[error("lemma hypothesis does not hold: partial set cost {cost} is below radius {radius}")]
    PreconditionUnmet { cost: f64, radius: f64 },

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
