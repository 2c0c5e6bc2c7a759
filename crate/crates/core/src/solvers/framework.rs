//! Seed-and-grow framework.
//!
//! Every (γ+1)-subset is tried as a seed with cost α. Its threshold is
//! ρ = α/λ, and the seed is grown one point at a time while the set cost stays
//! at or above ρ. The largest ρ whose seed reaches k points wins and is
//! reported as the solution's lower bound.
//!
//! | γ | geometry | λ   | guarantee      |
//! |---|----------|-----|----------------|
//! | 2 | plane    | 2√3 | 2√3-approx     |
//! | 1 | plane    | 2   | 2-approx       |
//! | 2 | line     | 1   | optimal        |

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::combinations::Combinations;
use crate::error::{Error, Result};
use crate::geometry::Instance;
use crate::scalar::Scalar;
use crate::solution::{Method, Solution};

use super::growth::GrowthSet;
use super::{lambda_for, DistanceMatrix};

/// How the next point is picked during growth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectionRule {
    /// Among candidates that keep the set cost ≥ ρ, take the one closest to
    /// the set (smallest point cost against it).
    #[default]
    FilteredMin,
    /// Take a global minimizer of the point cost against the set, and only
    /// if it also keeps the set cost ≥ ρ. Can stall where `FilteredMin`
    /// would not; kept for comparison.
    Literal,
}

/// Bookkeeping after each examined seed.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameworkState<T> {
    pub lambda: T,
    /// Cost of the most recent seed.
    pub alpha: T,
    /// `alpha / lambda`.
    pub rho: T,
    /// Largest threshold whose seed grew to k points so far.
    pub beta: T,
    /// The set that certified `beta`, ascending.
    pub best: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy)]
pub struct Framework {
    rule: SelectionRule,
    parallel: bool,
}

impl Default for Framework {
    fn default() -> Self {
        Self {
            rule: SelectionRule::FilteredMin,
            parallel: true,
        }
    }
}

impl Framework {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rule(mut self, rule: SelectionRule) -> Self {
        self.rule = rule;
        self
    }

    /// Spread seeds over the rayon pool. The result is identical to the
    /// sequential scan; with a single worker the sequential scan is used.
    pub fn parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    fn check_seed<T: Scalar>(instance: &Instance<T>, seed: &[usize]) -> Result<()> {
        let g = instance.gamma().get();
        let mut sorted = seed.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != g + 1 || seed.len() != g + 1 {
            return Err(Error::InvalidInstance(format!(
                "seed must hold {} distinct indices, got {seed:?}",
                g + 1
            )));
        }
        if sorted[g] >= instance.n() {
            return Err(Error::InvalidInstance(format!(
                "seed index {} out of range for n = {}",
                sorted[g],
                instance.n()
            )));
        }
        Ok(())
    }

    /// Grows `seed` while the set cost stays ≥ `rho`. Returns the k-set
    /// (ascending) or `None` when no admissible candidate is left first.
    pub fn grow<T: Scalar>(
        &self,
        instance: &Instance<T>,
        seed: &[usize],
        rho: T,
    ) -> Result<Option<Vec<usize>>> {
        self.grow_observed(instance, seed, rho, |_| {})
    }

    /// Like [`Framework::grow`], calling `observer` with the members (in
    /// insertion order) after every accepted point.
    pub fn grow_observed<T: Scalar>(
        &self,
        instance: &Instance<T>,
        seed: &[usize],
        rho: T,
        mut observer: impl FnMut(&[usize]),
    ) -> Result<Option<Vec<usize>>> {
        Self::check_seed(instance, seed)?;
        let dm = DistanceMatrix::new(instance.points());
        let mut set = GrowthSet::new(&dm, instance.gamma());
        set.reset(seed);
        let grown = self.grow_set(&mut set, instance.k(), rho, &mut observer);
        Ok(grown.then(|| set.sorted_members()))
    }

    fn grow_set<T: Scalar>(
        &self,
        set: &mut GrowthSet<'_, T>,
        k: usize,
        rho: T,
        observer: &mut impl FnMut(&[usize]),
    ) -> bool {
        let threshold = rho * (T::one() - T::band_tol());
        while set.len() < k {
            let pick = match self.rule {
                SelectionRule::FilteredMin => select_filtered(set, threshold),
                SelectionRule::Literal => select_literal(set, threshold),
            };
            match pick {
                Some(q) => {
                    set.push(q);
                    observer(set.members());
                }
                None => return false,
            }
        }
        true
    }

    pub fn solve<T: Scalar>(&self, instance: &Instance<T>) -> Result<Solution<T>> {
        if self.parallel && rayon::current_num_threads() > 1 {
            self.solve_parallel(instance)
        } else {
            self.solve_observed(instance, |_| {})
        }
    }

    /// Sequential scan in lexicographic seed order, reporting the state after
    /// every seed.
    pub fn solve_observed<T: Scalar>(
        &self,
        instance: &Instance<T>,
        mut observer: impl FnMut(&FrameworkState<T>),
    ) -> Result<Solution<T>> {
        let lambda: T = lambda_for(instance.gamma(), instance.mode())?;
        let dm = DistanceMatrix::new(instance.points());
        let mut set = GrowthSet::new(&dm, instance.gamma());
        let mut state = FrameworkState {
            lambda,
            alpha: T::zero(),
            rho: T::zero(),
            beta: T::zero(),
            best: None,
        };
        let mut seeds = Combinations::new(instance.n(), instance.gamma().get() + 1);
        while let Some(seed) = seeds.next_subset() {
            state.alpha = GrowthSet::seed_cost(&dm, instance.gamma(), seed);
            state.rho = state.alpha / lambda;
            if state.rho > state.beta && {
                set.reset(seed);
                self.grow_set(&mut set, instance.k(), state.rho, &mut |_| {})
            } {
                state.beta = state.rho;
                state.best = Some(set.sorted_members());
            }
            observer(&state);
        }
        let best = state.best.ok_or(Error::NoSolution)?;
        Solution::new(instance, best, Method::Framework, Some(state.beta))
    }

    /// Seeds are split by their first index. Each worker keeps the sequential
    /// acceptance rule locally; a shared maximum lets workers skip seeds whose
    /// ρ is already beaten. Ties are resolved by seed order when reducing, so
    /// the winner matches the sequential scan.
    fn solve_parallel<T: Scalar>(&self, instance: &Instance<T>) -> Result<Solution<T>> {
        let lambda: T = lambda_for(instance.gamma(), instance.mode())?;
        let dm = DistanceMatrix::new(instance.points());
        let (n, k, g) = (instance.n(), instance.k(), instance.gamma().get());
        // Non-negative floats order the same as their bit patterns.
        let shared = AtomicU64::new(0f64.to_bits());

        let per_first: Vec<Option<(T, Vec<usize>)>> = (0..n)
            .into_par_iter()
            .map(|first| {
                let mut set = GrowthSet::new(&dm, instance.gamma());
                let mut local: Option<(T, Vec<usize>)> = None;
                let mut seed = vec![first; g + 1];
                let mut rest = Combinations::new(n.saturating_sub(first + 1), g);
                while let Some(tail) = rest.next_subset() {
                    for (slot, &t) in seed[1..].iter_mut().zip(tail) {
                        *slot = first + 1 + t;
                    }
                    let rho = GrowthSet::seed_cost(&dm, instance.gamma(), &seed) / lambda;
                    let beta = local.as_ref().map_or(T::zero(), |(b, _)| *b);
                    let global = f64::from_bits(shared.load(Ordering::Relaxed));
                    let rho_f64 = rho.to_f64().unwrap_or(f64::INFINITY);
                    if rho > beta && rho_f64 >= global && {
                        set.reset(&seed);
                        self.grow_set(&mut set, k, rho, &mut |_| {})
                    } {
                        local = Some((rho, set.sorted_members()));
                        shared.fetch_max(rho_f64.to_bits(), Ordering::Relaxed);
                    }
                }
                local
            })
            .collect();

        let mut best: Option<(T, Vec<usize>)> = None;
        for (rho, set) in per_first.into_iter().flatten() {
            if best.as_ref().is_none_or(|(b, _)| rho > *b) {
                best = Some((rho, set));
            }
        }
        let (beta, set) = best.ok_or(Error::NoSolution)?;
        Solution::new(instance, set, Method::Framework, Some(beta))
    }
}

fn select_filtered<T: Scalar>(set: &GrowthSet<'_, T>, threshold: T) -> Option<usize> {
    let mut best: Option<(T, usize)> = None;
    for q in 0..set.universe() {
        if set.contains(q) {
            continue;
        }
        let own = set.own_cost(q);
        // Ascending scan: an equal cost never displaces the smaller index.
        if own < threshold || best.is_some_and(|(b, _)| own >= b) {
            continue;
        }
        if set.joined_reaches(q, own, threshold) {
            best = Some((own, q));
        }
    }
    best.map(|(_, q)| q)
}

fn select_literal<T: Scalar>(set: &GrowthSet<'_, T>, threshold: T) -> Option<usize> {
    let n = set.universe();
    let min = (0..n)
        .filter(|&q| !set.contains(q))
        .map(|q| set.own_cost(q))
        .fold(T::infinity(), T::min);
    (0..n)
        .filter(|&q| !set.contains(q))
        .filter(|&q| set.own_cost(q) == min)
        .find(|&q| set.joined_reaches(q, min, threshold))
}

/// [`Framework::grow`] with the default selection rule.
pub fn framework_grow<T: Scalar>(
    instance: &Instance<T>,
    seed: &[usize],
    rho: T,
) -> Result<Option<Vec<usize>>> {
    Framework::default().grow(instance, seed, rho)
}

/// [`Framework::solve`] with default settings.
pub fn framework_solve<T: Scalar>(instance: &Instance<T>) -> Result<Solution<T>> {
    Framework::default().solve(instance)
}
