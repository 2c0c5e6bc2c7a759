//! The greedy algorithm, the seed-and-grow framework and the exhaustive oracle.

mod framework;
mod greedy;
mod growth;
mod oracle;

pub use framework::{framework_grow, framework_solve, Framework, FrameworkState, SelectionRule};
pub use greedy::{greedy_dispersion, greedy_seed};
pub use oracle::{brute_force_opt, Oracle, DEFAULT_BUDGET};

use crate::error::{Error, Result};
use crate::geometry::{dist, Gamma, Instance, Mode, Point};
use crate::scalar::Scalar;
use crate::solution::{Method, Solution};

/// Dense pairwise distances, row-major.
#[derive(Debug, Clone)]
pub struct DistanceMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> DistanceMatrix<T> {
    pub fn new(points: &[Point<T>]) -> Self {
        let n = points.len();
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = dist(&points[i], &points[j]);
                data[i * n + j] = d;
                data[j * n + i] = d;
            }
        }
        Self { n, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// The framework's regime constant λ, which is also its proved factor.
pub fn lambda_for<T: Scalar>(gamma: Gamma, mode: Mode) -> Result<T> {
    match (gamma, mode) {
        (Gamma::Two, Mode::Plane) => Ok(T::lit(2.0) * T::sqrt3()),
        (Gamma::One, Mode::Plane) => Ok(T::lit(2.0)),
        (Gamma::Two, Mode::Line) => Ok(T::one()),
        (Gamma::One, Mode::Line) => Err(Error::UnsupportedRegime { gamma, mode }),
    }
}

/// Runs the solver named by `method` with default settings.
pub fn solve<T: Scalar>(instance: &Instance<T>, method: Method) -> Result<Solution<T>> {
    match method {
        Method::Greedy => greedy_dispersion(instance),
        Method::Framework => framework_solve(instance),
        Method::Oracle => brute_force_opt(instance),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_table() {
        let l: f64 = lambda_for(Gamma::Two, Mode::Plane).unwrap();
        assert!((l - 3.4641016151377544).abs() < 1e-15);
        assert_eq!(lambda_for::<f64>(Gamma::One, Mode::Plane).unwrap(), 2.0);
        assert_eq!(lambda_for::<f64>(Gamma::Two, Mode::Line).unwrap(), 1.0);
        assert!(matches!(
            lambda_for::<f64>(Gamma::One, Mode::Line),
            Err(Error::UnsupportedRegime { .. })
        ));
    }

    #[test]
    fn matrix_is_symmetric_with_zero_diagonal() {
        let pts: Vec<Point<f64>> = [(0.0, 0.0), (3.0, 4.0), (-1.0, 2.5)]
            .iter()
            .map(|&(x, y)| Point::new(x, y).unwrap())
            .collect();
        let dm = DistanceMatrix::new(&pts);
        assert_eq!(dm.get(0, 1), 5.0);
        for i in 0..3 {
            assert_eq!(dm.get(i, i), 0.0);
            for j in 0..3 {
                assert_eq!(dm.get(i, j), dm.get(j, i));
            }
        }
    }
}
