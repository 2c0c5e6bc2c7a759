use crate::error::{Error, Result};
use crate::geometry::{dist, Point};
use crate::scalar::Scalar;

/// Closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk<T> {
    center: Point<T>,
    radius: T,
}

impl<T: Scalar> Disk<T> {
    pub fn new(center: Point<T>, radius: T) -> Result<Self> {
        if radius.is_nan() || radius < T::zero() || !radius.is_finite() {
            return Err(Error::InvariantViolation(format!(
                "disk radius must be finite and non-negative, got {radius}"
            )));
        }
        Ok(Self { center, radius })
    }

    pub fn center(&self) -> Point<T> {
        self.center
    }

    pub fn radius(&self) -> T {
        self.radius
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Outside,
    OnBoundary,
    /// Strictly inside.
    ProperlyContained,
}

impl Containment {
    /// Inside or on the boundary.
    pub fn is_contained(self) -> bool {
        self != Containment::Outside
    }
}

/// Distances within a relative band of the radius count as boundary contact.
pub fn containment<T: Scalar>(disk: &Disk<T>, p: &Point<T>) -> Containment {
    let d = dist(&disk.center, p);
    let band = disk.radius * T::band_tol();
    if d < disk.radius - band {
        Containment::ProperlyContained
    } else if d <= disk.radius + band {
        Containment::OnBoundary
    } else {
        Containment::Outside
    }
}
