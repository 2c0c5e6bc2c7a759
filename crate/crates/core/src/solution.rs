use std::fmt;

use crate::cost::cost_set;
use crate::error::{Error, Result};
use crate::geometry::Instance;
use crate::scalar::Scalar;

/// Which procedure produced a [`Solution`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Best triple, then repeated best single additions.
    Greedy,
    /// Seed enumeration with threshold-preserving growth.
    Framework,
    /// Exhaustive enumeration of all k-subsets.
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Greedy => "greedy",
            Method::Framework => "framework",
            Method::Oracle => "oracle",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(Method::Greedy),
            "framework" => Ok(Method::Framework),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::InvariantViolation(format!(
                "unknown algorithm `{other}`"
            ))),
        }
    }
}

/// A selected k-subset together with its cost.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution<T> {
    indices: Vec<usize>,
    cost: T,
    method: Method,
    lower_bound: Option<T>,
}

impl<T: Scalar> Solution<T> {
    /// Sorts `indices` and recomputes the cost from scratch.
    pub fn new(
        instance: &Instance<T>,
        mut indices: Vec<usize>,
        method: Method,
        lower_bound: Option<T>,
    ) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if indices.len() != instance.k() {
            return Err(Error::InvariantViolation(format!(
                "solution has {} distinct indices, expected k = {}",
                indices.len(),
                instance.k()
            )));
        }
        if let Some(&last) = indices.last() {
            if last >= instance.n() {
                return Err(Error::InvariantViolation(format!(
                    "index {last} out of range for n = {}",
                    instance.n()
                )));
            }
        }
        let cost = cost_set(instance.points(), &indices, instance.gamma())?;
        if let Some(lb) = lower_bound {
            if !lb.le_tol(cost) {
                return Err(Error::InvariantViolation(format!(
                    "lower bound {lb} exceeds cost {cost}"
                )));
            }
        }
        Ok(Self {
            indices,
            cost,
            method,
            lower_bound,
        })
    }

    /// Selected point indices, ascending.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn cost(&self) -> T {
        self.cost
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// The certified threshold the framework accepted, when it produced this.
    pub fn lower_bound(&self) -> Option<T> {
        self.lower_bound
    }
}
