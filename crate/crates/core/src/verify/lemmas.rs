//! Checkable consequences of the disk-packing arguments.
//!
//! With `S*` optimal and ρ = cost(S*)/λ, λ = 2√3 for γ = 2 and 2 for γ = 1,
//! every disk of radius ρ centered at an input point properly contains at most
//! γ points of `S*`. From that follow the limits on how many optimal-centered
//! disks can contain one point, and the counting step that lets the
//! framework always extend a partial set with cost ≥ ρ.
//!
//! The radius always uses the planar λ. A line is a subset of the plane, so
//! the planar bounds hold there too, whereas λ = 1 only describes the
//! framework's threshold on a line.

use crate::combinations::Combinations;
use crate::cost::{cost_point, cost_set, nearest_indices};
use crate::error::{Error, Result};
use crate::geometry::{Gamma, Instance, Mode};
use crate::scalar::Scalar;
use crate::solution::Solution;
use crate::solvers::{lambda_for, Framework};

use super::disk::{containment, Containment, Disk};

/// ρ = cost(opt) / λ with the planar λ for the instance's γ.
pub fn lemma_radius<T: Scalar>(instance: &Instance<T>, opt: &Solution<T>) -> T {
    let lambda: T = lambda_for(instance.gamma(), Mode::Plane).expect("planar lambda exists");
    opt.cost() / lambda
}

fn disks_at<'a, T: Scalar>(
    instance: &'a Instance<T>,
    centers: &'a [usize],
    radius: T,
) -> impl Iterator<Item = Disk<T>> + 'a {
    centers
        .iter()
        .map(move |&c| Disk::new(instance.points()[c], radius).expect("valid radius"))
}

/// Every radius-ρ disk centered at an input point properly contains at most
/// γ optimal points.
pub fn check_opt_disk_lemma<T: Scalar>(instance: &Instance<T>, opt: &Solution<T>) -> bool {
    let radius = lemma_radius(instance, opt);
    instance.points().iter().all(|&center| {
        let disk = Disk::new(center, radius).expect("valid radius");
        let inside = opt
            .indices()
            .iter()
            .filter(|&&o| {
                containment(&disk, &instance.points()[o]) == Containment::ProperlyContained
            })
            .count();
        inside <= instance.gamma().get()
    })
}

/// Every input point lies in at most γ+1 optimal-centered disks and strictly
/// inside at most γ of them.
pub fn check_corollary_limits<T: Scalar>(instance: &Instance<T>, opt: &Solution<T>) -> bool {
    let radius = lemma_radius(instance, opt);
    let disks: Vec<Disk<T>> = disks_at(instance, opt.indices(), radius).collect();
    let g = instance.gamma().get();
    instance.points().iter().all(|p| {
        let (mut contained, mut proper) = (0, 0);
        for disk in &disks {
            match containment(disk, p) {
                Containment::ProperlyContained => {
                    contained += 1;
                    proper += 1;
                }
                Containment::OnBoundary => contained += 1,
                Containment::Outside => {}
            }
        }
        contained <= g + 1 && proper <= g
    })
}

/// For a partial set with fewer than k points and cost ≥ ρ, some
/// optimal-centered disk properly contains at most γ−1 of its points.
///
/// Returns [`Error::PreconditionUnmet`] when the partial set's cost is below
/// ρ, since the statement says nothing about such sets.
pub fn check_counting_lemma<T: Scalar>(
    instance: &Instance<T>,
    opt: &Solution<T>,
    partial: &[usize],
) -> Result<bool> {
    if partial.len() >= instance.k() {
        return Err(Error::InvalidInstance(format!(
            "partial set has {} points, needs fewer than k = {}",
            partial.len(),
            instance.k()
        )));
    }
    let radius = lemma_radius(instance, opt);
    let cost = cost_set(instance.points(), partial, instance.gamma())?;
    if cost < radius * (T::one() - T::band_tol()) {
        return Err(Error::PreconditionUnmet {
            cost: cost.to_f64().unwrap_or(f64::NAN),
            radius: radius.to_f64().unwrap_or(f64::NAN),
        });
    }
    let limit = instance.gamma().get() - 1;
    Ok(disks_at(instance, opt.indices(), radius).any(|disk| {
        partial
            .iter()
            .filter(|&&q| {
                containment(&disk, &instance.points()[q]) == Containment::ProperlyContained
            })
            .count()
            <= limit
    }))
}

/// Members of `opt` whose point cost equals the set cost.
pub fn solution_points<T: Scalar>(instance: &Instance<T>, opt: &Solution<T>) -> Vec<usize> {
    let gamma = instance.gamma();
    opt.indices()
        .iter()
        .copied()
        .filter(|&p| {
            cost_point(instance.points(), p, opt.indices(), gamma)
                .map(|c| c.approx_eq(opt.cost()))
                .unwrap_or(false)
        })
        .collect()
}

/// On a line, every solution point of an optimal 2-dispersion set has its two
/// nearest optimal neighbours on opposite sides, and they are its immediate
/// neighbours among the optimal points.
pub fn check_line_structure<T: Scalar>(instance: &Instance<T>, opt: &Solution<T>) -> Result<bool> {
    if instance.mode() != Mode::Line || instance.gamma() != Gamma::Two {
        return Err(Error::InvalidInstance(
            "line structure applies to gamma = 2 line instances".into(),
        ));
    }
    let pts = instance.points();
    let mut order = opt.indices().to_vec();
    order.sort_by(|&a, &b| {
        pts[a]
            .x()
            .partial_cmp(&pts[b].x())
            .expect("finite")
            .then(a.cmp(&b))
    });
    for s in solution_points(instance, opt) {
        let pos = order.iter().position(|&o| o == s).expect("member");
        if pos == 0 || pos + 1 == order.len() {
            return Ok(false);
        }
        let mut nearest = nearest_indices(pts, s, opt.indices(), Gamma::Two)?;
        nearest.sort_unstable();
        let mut neighbours = [order[pos - 1], order[pos + 1]];
        neighbours.sort_unstable();
        let straddles =
            pts[order[pos - 1]].x() < pts[s].x() && pts[s].x() < pts[order[pos + 1]].x();
        if nearest != neighbours || !straddles {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of running every applicable lemma check on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub opt_disk: bool,
    pub corollaries: bool,
    /// All hypothesis-satisfying partial sets passed.
    pub counting: bool,
    /// How many partial sets met the hypothesis and were checked.
    pub counting_checked: usize,
    /// Only for γ = 2 line instances.
    pub line_structure: Option<bool>,
}

impl LemmaOutcome {
    pub fn pass(&self) -> bool {
        self.opt_disk && self.corollaries && self.counting && self.line_structure != Some(false)
    }
}

/// Partial sets the counting lemma is exercised on: every (γ+1)-subset of
/// `opt`, `opt` minus each point, and every intermediate set of the
/// framework's growth from a solution point and its γ nearest optimal
/// neighbours at the lemma radius.
pub fn counting_partials<T: Scalar>(instance: &Instance<T>, opt: &Solution<T>) -> Vec<Vec<usize>> {
    let (k, g) = (instance.k(), instance.gamma().get());
    let mut partials = Vec::new();
    if g + 1 < k {
        let mut combos = Combinations::new(k, g + 1);
        while let Some(c) = combos.next_subset() {
            partials.push(c.iter().map(|&i| opt.indices()[i]).collect());
        }
    }
    if k > g + 1 {
        for skip in 0..k {
            partials.push(
                opt.indices()
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &o)| o)
                    .collect(),
            );
        }
    }
    let radius = lemma_radius(instance, opt);
    for s in solution_points(instance, opt) {
        let Ok(mut seed) = nearest_indices(instance.points(), s, opt.indices(), instance.gamma())
        else {
            continue;
        };
        seed.push(s);
        let _ = Framework::new().grow_observed(instance, &seed, radius, |members| {
            if members.len() < k {
                partials.push(members.to_vec());
            }
        });
    }
    partials
}

pub fn check_lemmas<T: Scalar>(instance: &Instance<T>, opt: &Solution<T>) -> Result<LemmaOutcome> {
    let mut counting = true;
    let mut counting_checked = 0;
    for partial in counting_partials(instance, opt) {
        match check_counting_lemma(instance, opt, &partial) {
            Ok(ok) => {
                counting &= ok;
                counting_checked += 1;
            }
            Err(Error::PreconditionUnmet { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let line_structure = (instance.mode() == Mode::Line && instance.gamma() == Gamma::Two)
        .then(|| check_line_structure(instance, opt))
        .transpose()?;
    Ok(LemmaOutcome {
        opt_disk: check_opt_disk_lemma(instance, opt),
        corollaries: check_corollary_limits(instance, opt),
        counting,
        counting_checked,
        line_structure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::solvers::brute_force_opt;

    fn plane(coords: &[(f64, f64)], k: usize, gamma: Gamma) -> Instance<f64> {
        let pts = coords
            .iter()
            .map(|&(x, y)| Point::new(x, y).unwrap())
            .collect();
        Instance::new(pts, k, gamma, Mode::Plane).unwrap()
    }

    fn line(xs: &[f64], k: usize) -> Instance<f64> {
        let pts = xs.iter().map(|&x| Point::on_line(x).unwrap()).collect();
        Instance::new(pts, k, Gamma::Two, Mode::Line).unwrap()
    }

    #[test]
    fn equilateral_triangle_disks_hold_only_their_center() {
        let h = 3f64.sqrt() / 2.0;
        let inst = plane(&[(0.0, 0.0), (1.0, 0.0), (0.5, h)], 3, Gamma::Two);
        let opt = brute_force_opt(&inst).unwrap();
        let r = lemma_radius(&inst, &opt);
        assert!((r - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!(check_opt_disk_lemma(&inst, &opt));
        assert!(check_corollary_limits(&inst, &opt));
    }

    #[test]
    fn farthest_pair_gamma_one() {
        let inst = plane(
            &[(0.0, 0.0), (1.0, 1.0), (4.0, 0.0), (2.0, 3.0)],
            2,
            Gamma::One,
        );
        let opt = brute_force_opt(&inst).unwrap();
        assert!(check_opt_disk_lemma(&inst, &opt));
        assert!(check_corollary_limits(&inst, &opt));
    }

    #[test]
    fn k_equals_gamma_plus_one_always_holds() {
        let coords = [
            (0.0, 0.0),
            (5.0, 0.5),
            (1.0, 6.0),
            (7.0, 7.0),
            (3.0, 3.0),
            (9.0, 2.0),
        ];
        for gamma in [Gamma::One, Gamma::Two] {
            let inst = plane(&coords, gamma.get() + 1, gamma);
            let opt = brute_force_opt(&inst).unwrap();
            assert!(check_opt_disk_lemma(&inst, &opt));
            assert!(check_corollary_limits(&inst, &opt));
        }
    }

    #[test]
    fn counting_lemma_opt_minus_one() {
        let coords = [
            (0.0, 0.0),
            (5.0, 0.5),
            (1.0, 6.0),
            (7.0, 7.0),
            (3.0, 3.0),
            (9.0, 2.0),
        ];
        let inst = plane(&coords, 4, Gamma::Two);
        let opt = brute_force_opt(&inst).unwrap();
        for skip in 0..4 {
            let partial: Vec<usize> = opt
                .indices()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &o)| o)
                .collect();
            assert!(check_counting_lemma(&inst, &opt, &partial).unwrap());
        }
    }

    #[test]
    fn counting_lemma_hypothesis_gate() {
        let inst = plane(
            &[
                (0.0, 0.0),
                (0.01, 0.0),
                (0.0, 0.01),
                (10.0, 0.0),
                (0.0, 10.0),
                (10.0, 10.0),
            ],
            4,
            Gamma::Two,
        );
        let opt = brute_force_opt(&inst).unwrap();
        let err = check_counting_lemma(&inst, &opt, &[0, 1, 2]).unwrap_err();
        assert!(matches!(err, Error::PreconditionUnmet { .. }));
        assert!(check_counting_lemma(&inst, &opt, &[0, 1, 2, 3]).is_err());
    }

    #[test]
    fn line_structure_examples() {
        let inst = line(&[0.0, 1.0, 3.0], 3);
        let opt = brute_force_opt(&inst).unwrap();
        assert_eq!(solution_points(&inst, &opt), vec![1]);
        assert!(check_line_structure(&inst, &opt).unwrap());

        let inst = line(&[0.0, 10.0, 11.0, 12.0, 30.0], 4);
        let opt = brute_force_opt(&inst).unwrap();
        assert!(check_line_structure(&inst, &opt).unwrap());

        // Any three points on a line: the middle one is the solution point.
        let inst = line(&[0.0, 10.0, 11.0], 3);
        let opt = brute_force_opt(&inst).unwrap();
        assert_eq!(solution_points(&inst, &opt), vec![1]);
        assert!(check_line_structure(&inst, &opt).unwrap());
        let plane_inst = plane(&[(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)], 3, Gamma::Two);
        let opt = brute_force_opt(&plane_inst).unwrap();
        assert!(check_line_structure(&plane_inst, &opt).is_err());
    }

    #[test]
    fn full_outcome_on_a_small_instance() {
        let coords = [
            (0.0, 0.0),
            (5.0, 0.5),
            (1.0, 6.0),
            (7.0, 7.0),
            (3.0, 3.0),
            (9.0, 2.0),
            (4.0, 8.0),
        ];
        for (k, gamma) in [
            (3, Gamma::Two),
            (5, Gamma::Two),
            (2, Gamma::One),
            (4, Gamma::One),
        ] {
            let inst = plane(&coords, k, gamma);
            let opt = brute_force_opt(&inst).unwrap();
            let out = check_lemmas(&inst, &opt).unwrap();
            assert!(out.pass(), "{out:?}");
            assert_eq!(out.line_structure, None);
            if k > gamma.get() + 1 {
                assert!(out.counting_checked > 0);
            }
        }
    }
}
