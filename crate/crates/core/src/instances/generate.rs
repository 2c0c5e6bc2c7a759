//! Seeded instance families.
//!
//! The random stream is xoshiro256++ seeded through SplitMix64
//! (`seed_from_u64`). Reals are drawn as `(next_u64 >> 11) · 2⁻⁵³`, which is
//! uniform on [0, 1). A Gaussian draw consumes two uniforms `u1, u2` and
//! returns `sqrt(-2 ln(1 - u1)) · cos(2π u2)` (Box–Muller, cosine branch
//! only). Points are drawn in index order, `x` before `y`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::geometry::{Gamma, Instance, Mode, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// i.i.d. uniform in the `extent × extent` square.
    Uniform,
    /// Uniform on `[0, extent]` with `y = 0`; produces line instances.
    Collinear,
    /// Row-major `m × m` lattice, `m = ⌈√n⌉`, truncated to `n` points.
    Grid,
    /// `⌈n/5⌉` uniform centers with Gaussian offsets, σ = extent / 20.
    Clustered,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Uniform,
        Family::Collinear,
        Family::Grid,
        Family::Clustered,
    ];

    pub fn mode(self) -> Mode {
        match self {
            Family::Collinear => Mode::Line,
            _ => Mode::Plane,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Uniform => "uniform",
            Family::Collinear => "collinear",
            Family::Grid => "grid",
            Family::Clustered => "clustered",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub gamma: Gamma,
    pub seed: u64,
    /// Side of the square, or length of the segment.
    pub extent: f64,
}

impl GeneratorSpec {
    pub fn validate(&self) -> Result<()> {
        let lo = self.gamma.get() + 1;
        if self.k < lo || self.k > self.n {
            return Err(Error::InvalidSpec(format!(
                "k = {} outside [{lo}, {}]",
                self.k, self.n
            )));
        }
        if !(self.extent.is_finite() && self.extent > 0.0) {
            return Err(Error::InvalidSpec(format!(
                "extent must be positive and finite, got {}",
                self.extent
            )));
        }
        Ok(())
    }

    /// `fixtures/<family>/<n>_<k>_<gamma>_<seed>.txt`
    pub fn fixture_path(&self) -> PathBuf {
        PathBuf::from("fixtures")
            .join(self.family.to_string())
            .join(format!(
                "{}_{}_{}_{}.txt",
                self.n, self.k, self.gamma, self.seed
            ))
    }
}

/// Uniform reals and Gaussians on top of xoshiro256++.
pub struct UnitRng(Xoshiro256PlusPlus);

impl UnitRng {
    pub fn new(seed: u64) -> Self {
        Self(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform on [0, 1).
    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi);
        lo + (self.unit() * (hi - lo + 1) as f64) as usize
    }

    pub fn gaussian(&mut self) -> f64 {
        let u1 = self.unit();
        let u2 = self.unit();
        (-2.0 * (1.0 - u1).ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }
}

fn ceil_sqrt(n: usize) -> usize {
    let mut m = (n as f64).sqrt() as usize;
    while m * m < n {
        m += 1;
    }
    while m > 0 && (m - 1) * (m - 1) >= n {
        m -= 1;
    }
    m
}

pub fn generate(spec: &GeneratorSpec) -> Result<Instance<f64>> {
    spec.validate()?;
    let GeneratorSpec { n, extent, .. } = *spec;
    let mut rng = UnitRng::new(spec.seed);
    let coords: Vec<(f64, f64)> = match spec.family {
        Family::Uniform => (0..n)
            .map(|_| {
                let x = rng.unit() * extent;
                (x, rng.unit() * extent)
            })
            .collect(),
        Family::Collinear => (0..n).map(|_| (rng.unit() * extent, 0.0)).collect(),
        Family::Grid => {
            let m = ceil_sqrt(n);
            let spacing = extent / (m - 1) as f64;
            (0..n)
                .map(|i| ((i % m) as f64 * spacing, (i / m) as f64 * spacing))
                .collect()
        }
        Family::Clustered => {
            let sigma = extent / 20.0;
            let centers: Vec<(f64, f64)> = (0..n.div_ceil(5))
                .map(|_| {
                    let x = rng.unit() * extent;
                    (x, rng.unit() * extent)
                })
                .collect();
            (0..n)
                .map(|i| {
                    let (cx, cy) = centers[i % centers.len()];
                    let dx = sigma * rng.gaussian();
                    (cx + dx, cy + sigma * rng.gaussian())
                })
                .collect()
        }
    };
    let points = coords
        .into_iter()
        .map(|(x, y)| Point::new(x, y))
        .collect::<Result<Vec<_>>>()?;
    Instance::new(points, spec.k, spec.gamma, spec.family.mode())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: Family, n: usize, k: usize, seed: u64) -> GeneratorSpec {
        GeneratorSpec {
            family,
            n,
            k,
            gamma: Gamma::Two,
            seed,
            extent: 100.0,
        }
    }

    #[test]
    fn same_seed_same_points() {
        let a = generate(&spec(Family::Uniform, 8, 3, 1)).unwrap();
        let b = generate(&spec(Family::Uniform, 8, 3, 1)).unwrap();
        let c = generate(&spec(Family::Uniform, 8, 3, 2)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn first_uniform_draw_is_pinned() {
        // Locks the stream so any change to seeding or the unit conversion shows up.
        let mut rng = UnitRng::new(1);
        let first = 14971601782005023387u64;
        assert_eq!(rng.next_u64(), first);
        let mut rng = UnitRng::new(1);
        assert_eq!(rng.unit(), (first >> 11) as f64 / 9007199254740992.0);
    }

    #[test]
    fn collinear_is_a_line_instance() {
        let inst = generate(&spec(Family::Collinear, 5, 3, 9)).unwrap();
        assert_eq!(inst.mode(), Mode::Line);
        assert!(inst.points().iter().all(|p| p.y() == 0.0));
        assert!(inst.points().iter().all(|p| (0.0..100.0).contains(&p.x())));
    }

    #[test]
    fn grid_spacing() {
        let mut s = spec(Family::Grid, 9, 3, 0);
        s.extent = 2.0;
        let inst = generate(&s).unwrap();
        let got: Vec<(f64, f64)> = inst.points().iter().map(|p| (p.x(), p.y())).collect();
        let want: Vec<(f64, f64)> = (0..9).map(|i| ((i % 3) as f64, (i / 3) as f64)).collect();
        assert_eq!(got, want);

        let trunc = generate(&spec(Family::Grid, 7, 3, 0)).unwrap();
        assert_eq!(trunc.n(), 7);
        assert_eq!(trunc.points()[6].y(), 100.0);
    }

    #[test]
    fn clustered_points_stay_near_their_centers() {
        let inst = generate(&spec(Family::Clustered, 20, 4, 3)).unwrap();
        assert_eq!(inst.n(), 20);
        for p in inst.points() {
            assert!(p.x() > -50.0 && p.x() < 150.0 && p.y() > -50.0 && p.y() < 150.0);
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(&spec(Family::Uniform, 5, 6, 0)).is_err());
        assert!(generate(&spec(Family::Uniform, 5, 2, 0)).is_err());
        let mut s = spec(Family::Uniform, 5, 3, 0);
        s.extent = 0.0;
        assert!(matches!(generate(&s), Err(Error::InvalidSpec(_))));
        s.extent = f64::NAN;
        assert!(generate(&s).is_err());
    }

    #[test]
    fn ceil_sqrt_values() {
        for (n, m) in [
            (1, 1),
            (2, 2),
            (4, 2),
            (5, 3),
            (9, 3),
            (10, 4),
            (16, 4),
            (17, 5),
        ] {
            assert_eq!(ceil_sqrt(n), m, "n = {n}");
        }
    }

    #[test]
    fn fixture_layout() {
        let s = spec(Family::Clustered, 10, 4, 7);
        assert_eq!(
            s.fixture_path(),
            PathBuf::from("fixtures/clustered/10_4_2_7.txt")
        );
    }
}
