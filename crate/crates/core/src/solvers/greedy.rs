//! Best-triple-then-best-addition greedy for 2-dispersion in the plane.
//!
//! Every ε > 0 gives a (2√3 + ε) approximation; ε only enters the analysis,
//! so the algorithm takes no parameter for it.

use crate::combinations::Combinations;
use crate::error::{Error, Result};
use crate::geometry::{Gamma, Instance, Mode};
use crate::scalar::Scalar;
use crate::solution::{Method, Solution};

use super::growth::GrowthSet;
use super::DistanceMatrix;

fn check_regime<T: Scalar>(instance: &Instance<T>) -> Result<()> {
    if instance.gamma() != Gamma::Two || instance.mode() != Mode::Plane {
        return Err(Error::UnsupportedRegime {
            gamma: instance.gamma(),
            mode: instance.mode(),
        });
    }
    Ok(())
}

fn best_triple<'a, T: Scalar>(dm: &'a DistanceMatrix<T>) -> GrowthSet<'a, T> {
    let mut set = GrowthSet::new(dm, Gamma::Two);
    let mut best: Option<(T, [usize; 3])> = None;
    let mut triples = Combinations::new(dm.len(), 3);
    while let Some(t) = triples.next_subset() {
        let cost = GrowthSet::seed_cost(dm, Gamma::Two, t);
        if best.is_none_or(|(b, _)| cost > b) {
            best = Some((cost, [t[0], t[1], t[2]]));
        }
    }
    let (_, triple) = best.expect("at least three points");
    set.reset(&triple);
    set
}

/// The cost-maximal starting triple (lexicographically smallest on ties).
pub fn greedy_seed<T: Scalar>(instance: &Instance<T>) -> Result<[usize; 3]> {
    check_regime(instance)?;
    let dm = DistanceMatrix::new(instance.points());
    let set = best_triple(&dm);
    let mut triple = [set.members()[0], set.members()[1], set.members()[2]];
    triple.sort_unstable();
    Ok(triple)
}

pub fn greedy_dispersion<T: Scalar>(instance: &Instance<T>) -> Result<Solution<T>> {
    check_regime(instance)?;
    let dm = DistanceMatrix::new(instance.points());
    let mut set = best_triple(&dm);
    while set.len() < instance.k() {
        let mut best: Option<(T, usize)> = None;
        for q in (0..instance.n()).filter(|&q| !set.contains(q)) {
            let joined = set.joined_cost(q, set.own_cost(q));
            if best.is_none_or(|(b, _)| joined > b) {
                best = Some((joined, q));
            }
        }
        let (_, q) = best.expect("k <= n leaves a candidate");
        set.push(q);
    }
    Solution::new(instance, set.sorted_members(), Method::Greedy, None)
}
