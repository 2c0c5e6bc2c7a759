//! γ-dispersion cost of a point and of a set.
//!
//! Index sets refer to positions in a point slice. These routines scan the
//! set directly; the solvers use a precomputed [`DistanceMatrix`] instead.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::{dist, Gamma, Point};
use crate::scalar::Scalar;

/// The `gamma` members of `set \ {p}` closest to `points[p]`, nearest first.
/// Equal distances go to the smaller index.
pub fn nearest_indices<T: Scalar>(
    points: &[Point<T>],
    p: usize,
    set: &[usize],
    gamma: Gamma,
) -> Result<Vec<usize>> {
    let g = gamma.get();
    let origin = &points[p];
    let mut best: Vec<(T, usize)> = Vec::with_capacity(g + 1);
    let mut available = 0;
    for &q in set.iter().filter(|&&q| q != p) {
        available += 1;
        let entry = (dist(origin, &points[q]), q);
        let pos = best
            .iter()
            .position(|b| by_distance_then_index(&entry, b) == Ordering::Less)
            .unwrap_or(best.len());
        if pos < g {
            best.insert(pos, entry);
            best.truncate(g);
        }
    }
    if available < g {
        return Err(Error::TooFewNeighbors {
            needed: g,
            available,
        });
    }
    Ok(best.into_iter().map(|(_, q)| q).collect())
}

fn by_distance_then_index<T: Scalar>(a: &(T, usize), b: &(T, usize)) -> Ordering {
    a.0.partial_cmp(&b.0)
        .unwrap_or(Ordering::Equal)
        .then(a.1.cmp(&b.1))
}

/// Sum of distances from `points[p]` to its `gamma` nearest members of
/// `set \ {p}`. `p` does not have to belong to `set`.
pub fn cost_point<T: Scalar>(
    points: &[Point<T>],
    p: usize,
    set: &[usize],
    gamma: Gamma,
) -> Result<T> {
    let nearest = nearest_indices(points, p, set, gamma)?;
    Ok(nearest
        .iter()
        .fold(T::zero(), |acc, &q| acc + dist(&points[p], &points[q])))
}

/// Minimum point cost over the members of `set`.
pub fn cost_set<T: Scalar>(points: &[Point<T>], set: &[usize], gamma: Gamma) -> Result<T> {
    if set.len() <= gamma.get() {
        return Err(Error::TooFewNeighbors {
            needed: gamma.get(),
            available: set.len().saturating_sub(1),
        });
    }
    let mut min = T::infinity();
    for &p in set {
        min = min.min(cost_point(points, p, set, gamma)?);
    }
    Ok(min)
}
