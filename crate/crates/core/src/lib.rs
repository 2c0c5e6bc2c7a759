//! Euclidean γ-dispersion for γ ∈ {1, 2}.
//!
//! Given `n` points and a target `k`, pick `k` of them so that the smallest
//! γ-cost among the picked points is as large as possible, where the γ-cost
//! of a point is the sum of distances to its γ nearest picked neighbours.
//!
//! * [`solvers::greedy_dispersion`]: best triple, then best single additions
//!   (2-dispersion in the plane, factor 2√3 + ε for any ε > 0).
//! * [`solvers::framework_solve`]: seed-and-grow; factor 2√3 for
//!   2-dispersion in the plane, 2 for 1-dispersion in the plane, and exact
//!   for 2-dispersion on a line.
//! * [`solvers::brute_force_opt`]: exhaustive oracle for small instances.
//! * [`verify`]: executable forms of the disk-packing arguments behind those
//!   guarantees, plus ratio sweeps against the oracle.
//! * [`instances`]: seeded generators and the plain-text instance format.
//!
//! Geometry is generic over [`Scalar`] (`f64` or `f32`); the aliases below fix
//! the common `f64` case.

pub mod combinations;
pub mod cost;
pub mod error;
pub mod geometry;
pub mod instances;
pub mod scalar;
pub mod solution;
pub mod solvers;
pub mod verify;

pub use cost::{cost_point, cost_set, nearest_indices};
pub use error::{Error, Result};
pub use geometry::{dist, Gamma, Instance, Mode, Point};
pub use scalar::Scalar;
pub use solution::{Method, Solution};

pub type Point64 = Point<f64>;
pub type Instance64 = Instance<f64>;
pub type Solution64 = Solution<f64>;
pub type Point32 = Point<f32>;
pub type Instance32 = Instance<f32>;
pub type Solution32 = Solution<f32>;
