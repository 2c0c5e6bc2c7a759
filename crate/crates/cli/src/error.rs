use std::fmt;

/// A failure that ends the run, classified by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input, invalid flags or specs.
    Input(String),
    /// The request is well formed but outside what the solvers support:
    /// an unsupported regime, an exhausted oracle budget, no solution.
    Capability(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Capability(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Capability(msg) => f.write_str(msg),
        }
    }
}

impl From<dispersion::Error> for CliError {
    fn from(err: dispersion::Error) -> Self {
        use dispersion::Error::*;
        match err {
            UnsupportedRegime { .. } | BudgetExceeded { .. } | NoSolution => {
                CliError::Capability(err.to_string())
            }
            _ => CliError::Input(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Input(err.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        CliError::Input(err.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
