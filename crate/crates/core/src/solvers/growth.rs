//! Incrementally maintained candidate set shared by the greedy and framework
//! solvers.
//!
//! Each member keeps its two smallest distances to the other members, and
//! every point keeps its two smallest distances to the members. A candidate's
//! own cost is then O(1) and the cost of `S ∪ {q}` an O(|S|) scan. Adding a
//! member updates all points from one contiguous matrix row.

use crate::geometry::Gamma;
use crate::scalar::Scalar;

use super::DistanceMatrix;

pub(crate) struct GrowthSet<'a, T> {
    dm: &'a DistanceMatrix<T>,
    gamma: Gamma,
    members: Vec<usize>,
    in_set: Vec<bool>,
    near: Vec<[T; 2]>,
    to_set: Vec<[T; 2]>,
}

/// Keeps the two smallest of `near ∪ {d}`, ascending.
#[inline]
fn insert<T: Scalar>(near: [T; 2], d: T) -> [T; 2] {
    [near[0].min(d), near[1].min(near[0].max(d))]
}

#[inline]
fn near_cost<T: Scalar>(gamma: Gamma, near: [T; 2]) -> T {
    match gamma {
        Gamma::One => near[0],
        Gamma::Two => near[0] + near[1],
    }
}

impl<'a, T: Scalar> GrowthSet<'a, T> {
    pub fn new(dm: &'a DistanceMatrix<T>, gamma: Gamma) -> Self {
        Self {
            dm,
            gamma,
            members: Vec::new(),
            in_set: vec![false; dm.len()],
            near: Vec::new(),
            to_set: vec![[T::infinity(); 2]; dm.len()],
        }
    }

    /// Cost of `seed` on its own, without touching any state.
    #[inline]
    pub fn seed_cost(dm: &DistanceMatrix<T>, gamma: Gamma, seed: &[usize]) -> T {
        seed.iter().fold(T::infinity(), |acc, &m| {
            let near = seed
                .iter()
                .filter(|&&o| o != m)
                .fold([T::infinity(); 2], |n, &o| insert(n, dm.get(m, o)));
            acc.min(near_cost(gamma, near))
        })
    }

    /// Replaces the contents with `seed`, which must hold at least γ+1
    /// distinct indices.
    pub fn reset(&mut self, seed: &[usize]) {
        for &m in &self.members {
            self.in_set[m] = false;
        }
        self.members.clear();
        self.near.clear();
        for &m in seed {
            debug_assert!(!self.in_set[m], "duplicate seed index {m}");
            self.in_set[m] = true;
            self.members.push(m);
        }
        for &m in seed {
            let mut near = [T::infinity(); 2];
            for &o in seed {
                if o != m {
                    near = insert(near, self.dm.get(m, o));
                }
            }
            self.near.push(near);
        }
        self.to_set.fill([T::infinity(); 2]);
        for &m in seed {
            for (slot, &d) in self.to_set.iter_mut().zip(self.dm.row(m)) {
                *slot = insert(*slot, d);
            }
        }
    }

    #[inline]
    fn near_cost(&self, near: [T; 2]) -> T {
        near_cost(self.gamma, near)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Number of points candidates are drawn from.
    pub fn universe(&self) -> usize {
        self.in_set.len()
    }

    pub fn contains(&self, q: usize) -> bool {
        self.in_set[q]
    }

    #[cfg(test)]
    pub fn cost(&self) -> T {
        self.near
            .iter()
            .fold(T::infinity(), |acc, &n| acc.min(self.near_cost(n)))
    }

    /// Cost of candidate `q` against the members. Only meaningful for
    /// non-members.
    #[inline]
    pub fn own_cost(&self, q: usize) -> T {
        self.near_cost(self.to_set[q])
    }

    /// Cost of the set after adding `q`, given `own = own_cost(q)`.
    pub fn joined_cost(&self, q: usize, own: T) -> T {
        self.members
            .iter()
            .zip(&self.near)
            .fold(own, |acc, (&m, &near)| {
                acc.min(self.near_cost(insert(near, self.dm.get(q, m))))
            })
    }

    /// Whether adding `q` keeps the set cost at or above `threshold`.
    #[inline]
    pub fn joined_reaches(&self, q: usize, own: T, threshold: T) -> bool {
        own >= threshold
            && self
                .members
                .iter()
                .zip(&self.near)
                .all(|(&m, &near)| self.near_cost(insert(near, self.dm.get(q, m))) >= threshold)
    }

    pub fn push(&mut self, q: usize) {
        debug_assert!(!self.in_set[q]);
        let mut own = [T::infinity(); 2];
        for (i, &m) in self.members.iter().enumerate() {
            let d = self.dm.get(q, m);
            self.near[i] = insert(self.near[i], d);
            own = insert(own, d);
        }
        self.members.push(q);
        self.near.push(own);
        self.in_set[q] = true;
        for (slot, &d) in self.to_set.iter_mut().zip(self.dm.row(q)) {
            *slot = insert(*slot, d);
        }
    }

    /// Members, ascending.
    pub fn sorted_members(&self) -> Vec<usize> {
        let mut v = self.members.clone();
        v.sort_unstable();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{cost_point, cost_set};
    use crate::geometry::Point;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn incremental_costs_match_direct_evaluation(
            coords in prop::collection::vec((-50.0..50.0f64, -50.0..50.0f64), 5..12),
            two in any::<bool>(),
        ) {
            let points: Vec<Point<f64>> =
                coords.iter().map(|&(x, y)| Point::new(x, y).unwrap()).collect();
            let gamma = if two { Gamma::Two } else { Gamma::One };
            let dm = DistanceMatrix::new(&points);
            let mut set = GrowthSet::new(&dm, gamma);
            let seed: Vec<usize> = (0..=gamma.get()).collect();
            set.reset(&seed);
            prop_assert_eq!(set.cost(), cost_set(&points, &seed, gamma).unwrap());
            prop_assert_eq!(GrowthSet::seed_cost(&dm, gamma, &seed), set.cost());
            for q in seed.len()..points.len() {
                let own = set.own_cost(q);
                prop_assert_eq!(own, cost_point(&points, q, set.members(), gamma).unwrap());
                let mut joined: Vec<usize> = set.members().to_vec();
                joined.push(q);
                let direct = cost_set(&points, &joined, gamma).unwrap();
                prop_assert_eq!(set.joined_cost(q, own), direct);
                prop_assert!(set.joined_reaches(q, own, direct));
                set.push(q);
                prop_assert_eq!(set.cost(), direct);
            }
            // A reset must forget the previous contents entirely.
            let reseed: Vec<usize> = (points.len() - seed.len()..points.len()).collect();
            set.reset(&reseed);
            prop_assert_eq!(set.members(), &reseed[..]);
            for q in 0..points.len() - seed.len() {
                prop_assert_eq!(set.own_cost(q), cost_point(&points, q, &reseed, gamma).unwrap());
            }
        }
    }
}
