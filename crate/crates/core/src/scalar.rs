//! The floating-point scalar every geometric routine is generic over.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// A real coordinate type: `f64` for production runs, `f32` where memory
/// matters more than the last digits.
///
/// The tolerances are relative and scale with the precision of the type.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Relative tolerance for comparing derived quantities such as costs and ratios.
    const REL_TOL: f64;
    /// Relative width of the band around a growth threshold or a disk boundary.
    const BAND_TOL: f64;

    /// Converts an `f64` literal. Panics only for values the type cannot hold.
    fn lit(value: f64) -> Self {
        Self::from_f64(value).expect("literal representable in scalar type")
    }

    fn rel_tol() -> Self {
        Self::lit(Self::REL_TOL)
    }

    fn band_tol() -> Self {
        Self::lit(Self::BAND_TOL)
    }

    fn sqrt3() -> Self {
        Self::lit(3.0).sqrt()
    }

    /// `self ≤ other` up to the relative tolerance.
    fn le_tol(self, other: Self) -> bool {
        self <= other + Self::rel_tol() * other.abs().max(Self::one())
    }

    /// Equality up to the relative tolerance of the larger magnitude.
    fn approx_eq(self, other: Self) -> bool {
        let scale = self.abs().max(other.abs());
        (self - other).abs() <= Self::rel_tol() * scale
    }
}

impl Scalar for f64 {
    const REL_TOL: f64 = 1e-9;
    const BAND_TOL: f64 = 1e-12;
}

impl Scalar for f32 {
    const REL_TOL: f64 = 1e-5;
    const BAND_TOL: f64 = 1e-6;
}
