//! Strategies and property bodies shared by the property tests and the
//! acceptance run.

#![allow(dead_code)]

use std::fs::File;
use std::path::PathBuf;

use dispersion::instances::read_instance;
use dispersion::{cost_point, cost_set, dist, nearest_indices, Gamma, Instance64, Point64, Scalar};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn fixture(name: &str) -> Instance64 {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    read_instance(File::open(&path).expect("fixture exists")).expect("fixture parses")
}

/// A point cloud, γ, and nested index sets `subset ⊆ superset` with
/// `|subset| ≥ γ + 1`.
#[derive(Debug, Clone)]
pub struct CostCase {
    pub points: Vec<Point64>,
    pub gamma: Gamma,
    pub subset: Vec<usize>,
    pub superset: Vec<usize>,
}

fn coord() -> impl Strategy<Value = f64> {
    -100.0..100.0f64
}

fn gamma() -> impl Strategy<Value = Gamma> {
    prop_oneof![Just(Gamma::One), Just(Gamma::Two)]
}

pub fn cost_case() -> impl Strategy<Value = CostCase> {
    (3usize..=12, gamma())
        .prop_flat_map(|(n, g)| {
            (
                prop::collection::vec((coord(), coord()), n),
                Just(g),
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(coords, gamma, in_sub, in_super)| {
            let points = coords
                .into_iter()
                .map(|(x, y)| Point64::new(x, y).unwrap())
                .collect::<Vec<_>>();
            let mut subset: Vec<usize> = (0..points.len()).filter(|&i| in_sub[i]).collect();
            for i in 0..points.len() {
                if subset.len() > gamma.get() {
                    break;
                }
                if !subset.contains(&i) {
                    subset.push(i);
                }
            }
            subset.sort_unstable();
            let superset = (0..points.len())
                .filter(|&i| in_super[i] || subset.contains(&i))
                .collect();
            CostCase {
                points,
                gamma,
                subset,
                superset,
            }
        })
}

pub fn point_pair() -> impl Strategy<Value = (Point64, Point64)> {
    ((coord(), coord()), (coord(), coord()))
        .prop_map(|((a, b), (c, d))| (Point64::new(a, b).unwrap(), Point64::new(c, d).unwrap()))
}

pub fn rigid_motion() -> impl Strategy<Value = (f64, f64, f64)> {
    (
        0.0..std::f64::consts::TAU,
        -1000.0..1000.0f64,
        -1000.0..1000.0f64,
    )
}

pub fn scale_factor() -> impl Strategy<Value = f64> {
    0.01..100.0f64
}

pub fn symmetry((p, q): (Point64, Point64)) -> Result<(), TestCaseError> {
    prop_assert_eq!(dist(&p, &q), dist(&q, &p));
    prop_assert!(dist(&p, &q) >= 0.0);
    Ok(())
}

pub fn monotonicity(case: CostCase) -> Result<(), TestCaseError> {
    let small = cost_set(&case.points, &case.subset, case.gamma).unwrap();
    let large = cost_set(&case.points, &case.superset, case.gamma).unwrap();
    prop_assert!(large <= small, "{large} > {small} for {case:?}");
    Ok(())
}

pub fn rigid_motion_invariance(
    case: CostCase,
    (theta, tx, ty): (f64, f64, f64),
) -> Result<(), TestCaseError> {
    let (s, c) = theta.sin_cos();
    let moved: Vec<Point64> = case
        .points
        .iter()
        .map(|p| Point64::new(c * p.x() - s * p.y() + tx, s * p.x() + c * p.y() + ty).unwrap())
        .collect();
    let before = cost_set(&case.points, &case.subset, case.gamma).unwrap();
    let after = cost_set(&moved, &case.subset, case.gamma).unwrap();
    prop_assert!(before.approx_eq(after), "{before} vs {after}");
    Ok(())
}

pub fn scale_equivariance(case: CostCase, factor: f64) -> Result<(), TestCaseError> {
    let scaled: Vec<Point64> = case
        .points
        .iter()
        .map(|p| Point64::new(factor * p.x(), factor * p.y()).unwrap())
        .collect();
    let before = cost_set(&case.points, &case.subset, case.gamma).unwrap();
    let after = cost_set(&scaled, &case.subset, case.gamma).unwrap();
    let expected = factor * before;
    prop_assert!(
        (after - expected).abs() <= 1e-12 * expected.abs().max(f64::MIN_POSITIVE),
        "{after} vs {expected}"
    );
    Ok(())
}

pub fn cost_point_consistency(case: CostCase) -> Result<(), TestCaseError> {
    for &p in &case.subset {
        let nearest = nearest_indices(&case.points, p, &case.subset, case.gamma).unwrap();
        prop_assert_eq!(nearest.len(), case.gamma.get());
        prop_assert!(!nearest.contains(&p));
        let total = nearest
            .iter()
            .fold(0.0, |acc, &q| acc + dist(&case.points[p], &case.points[q]));
        prop_assert_eq!(
            cost_point(&case.points, p, &case.subset, case.gamma).unwrap(),
            total
        );
    }
    Ok(())
}
