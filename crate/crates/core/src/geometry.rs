//! Points, distances and the problem instance.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A location in the plane. Line instances keep `y = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point<T> {
    x: T,
    y: T,
}

impl<T: Scalar> Point<T> {
    /// Builds a point, rejecting NaN and infinite coordinates.
    pub fn new(x: T, y: T) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::InvariantViolation(format!(
                "non-finite coordinate ({x}, {y})"
            )));
        }
        Ok(Self { x, y })
    }

    /// A point on the horizontal axis.
    pub fn on_line(x: T) -> Result<Self> {
        Self::new(x, T::zero())
    }

    pub fn x(&self) -> T {
        self.x
    }

    pub fn y(&self) -> T {
        self.y
    }

    /// Converts the coordinates to another scalar type.
    pub fn cast<U: Scalar>(&self) -> Point<U> {
        Point {
            x: U::from(self.x).expect("coordinate representable"),
            y: U::from(self.y).expect("coordinate representable"),
        }
    }
}

/// Euclidean distance. `hypot` keeps the result exactly symmetric and avoids
/// overflow for far-apart points.
#[inline]
pub fn dist<T: Scalar>(p: &Point<T>, q: &Point<T>) -> T {
    (p.x - q.x).hypot(p.y - q.y)
}

/// Order of the dispersion cost: how many nearest neighbours are summed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gamma {
    One,
    Two,
}

impl Gamma {
    pub fn get(self) -> usize {
        match self {
            Gamma::One => 1,
            Gamma::Two => 2,
        }
    }
}

impl TryFrom<usize> for Gamma {
    type Error = Error;

    fn try_from(value: usize) -> Result<Self> {
        match value {
            1 => Ok(Gamma::One),
            2 => Ok(Gamma::Two),
            other => Err(Error::InvariantViolation(format!(
                "gamma must be 1 or 2, got {other}"
            ))),
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.get())
    }
}

/// Whether the points live in the plane or on a line (`y = 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Plane,
    Line,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Plane => "plane",
            Mode::Line => "line",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plane" => Ok(Mode::Plane),
            "line" => Ok(Mode::Line),
            other => Err(Error::InvariantViolation(format!(
                "mode must be `plane` or `line`, got `{other}`"
            ))),
        }
    }
}

/// A γ-dispersion instance: choose `k` of `points` maximizing the set cost.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance<T> {
    points: Vec<Point<T>>,
    k: usize,
    gamma: Gamma,
    mode: Mode,
}

impl<T: Scalar> Instance<T> {
    /// Validates `γ+1 ≤ k ≤ n` and, in line mode, `y = 0` for every point.
    pub fn new(points: Vec<Point<T>>, k: usize, gamma: Gamma, mode: Mode) -> Result<Self> {
        let n = points.len();
        if k < gamma.get() + 1 || k > n {
            return Err(Error::InvariantViolation(format!(
                "k = {k} outside [{}, {n}] for gamma = {gamma}",
                gamma.get() + 1
            )));
        }
        if mode == Mode::Line {
            if let Some(i) = points.iter().position(|p| p.y != T::zero()) {
                return Err(Error::InvariantViolation(format!(
                    "line instance has point {i} with y = {}",
                    points[i].y
                )));
            }
        }
        Ok(Self {
            points,
            k,
            gamma,
            mode,
        })
    }

    pub fn points(&self) -> &[Point<T>] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn gamma(&self) -> Gamma {
        self.gamma
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The same points with a different cardinality target.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        Self::new(self.points.clone(), k, self.gamma, self.mode)
    }

    /// The same instance with a different cost order.
    pub fn with_gamma(&self, gamma: Gamma) -> Result<Self> {
        Self::new(self.points.clone(), self.k, gamma, self.mode)
    }

    pub fn cast<U: Scalar>(&self) -> Instance<U> {
        Instance {
            points: self.points.iter().map(Point::cast).collect(),
            k: self.k,
            gamma: self.gamma,
            mode: self.mode,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point<f64> {
        Point::new(x, y).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(dist(&p(0.0, 0.0), &p(3.0, 4.0)), 5.0);
        assert_eq!(dist(&p(1.0, 1.0), &p(1.0, 1.0)), 0.0);
        assert_eq!(dist(&p(0.0, 0.0), &p(1.0, 0.0)), 1.0);
    }

    #[test]
    fn rejects_non_finite_coordinates() {
        assert!(Point::new(f64::NAN, 0.0).is_err());
        assert!(Point::new(0.0, f64::INFINITY).is_err());
        assert!(Point::new(f32::NEG_INFINITY, 0.0).is_err());
    }

    #[test]
    fn instance_bounds_on_k() {
        let pts = vec![p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)];
        assert!(Instance::new(pts.clone(), 3, Gamma::Two, Mode::Plane).is_ok());
        assert!(Instance::new(pts.clone(), 2, Gamma::Two, Mode::Plane).is_err());
        assert!(Instance::new(pts.clone(), 4, Gamma::One, Mode::Plane).is_err());
        assert!(Instance::new(pts, 2, Gamma::One, Mode::Line).is_ok());
    }

    #[test]
    fn line_mode_requires_zero_y() {
        let pts = vec![p(0.0, 0.0), p(1.0, 0.5), p(2.0, 0.0)];
        let err = Instance::new(pts, 3, Gamma::Two, Mode::Line).unwrap_err();
        assert!(matches!(err, Error::InvariantViolation(_)));
    }

    #[test]
    fn gamma_and_mode_parse() {
        assert_eq!(Gamma::try_from(2).unwrap(), Gamma::Two);
        assert!(Gamma::try_from(3).is_err());
        assert_eq!("line".parse::<Mode>().unwrap(), Mode::Line);
        assert!("Line".parse::<Mode>().is_err());
    }
}
