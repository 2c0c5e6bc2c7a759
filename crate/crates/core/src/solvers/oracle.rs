use crate::combinations::{binomial, Combinations};
use crate::cost::cost_set;
use crate::error::{Error, Result};
use crate::geometry::Instance;
use crate::scalar::Scalar;
use crate::solution::{Method, Solution};

/// Largest number of k-subsets the oracle enumerates by default.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Exhaustive search over every k-subset. Each subset is costed with
/// [`cost_set`] directly, independently of the solvers' incremental
/// bookkeeping.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub budget: u128,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
        }
    }
}

impl Oracle {
    pub fn with_budget(budget: u128) -> Self {
        Self { budget }
    }

    /// An optimal subset; ties go to the lexicographically smallest.
    pub fn solve<T: Scalar>(&self, instance: &Instance<T>) -> Result<Solution<T>> {
        let (n, k) = (instance.n(), instance.k());
        let subsets = binomial(n, k);
        if subsets > self.budget {
            return Err(Error::BudgetExceeded {
                subsets,
                budget: self.budget,
            });
        }
        let mut best: Option<(T, Vec<usize>)> = None;
        let mut combos = Combinations::new(n, k);
        while let Some(subset) = combos.next_subset() {
            let cost = cost_set(instance.points(), subset, instance.gamma())?;
            if best.as_ref().is_none_or(|(b, _)| cost > *b) {
                best = Some((cost, subset.to_vec()));
            }
        }
        let (_, indices) = best.ok_or(Error::NoSolution)?;
        Solution::new(instance, indices, Method::Oracle, None)
    }
}

/// [`Oracle::solve`] with the default budget.
pub fn brute_force_opt<T: Scalar>(instance: &Instance<T>) -> Result<Solution<T>> {
    Oracle::default().solve(instance)
}
