//! Brute-force ground truth, independent of the curve machinery.
//!
//! For every nonzero rational `x` of height at most `H`, the other two
//! coordinates are the roots of `Y^2 - (s-x)Y + p/x`, which are rational
//! exactly when the discriminant `(s-x)^2 - 4p/x` is a rational square. The
//! search is therefore complete for solutions having some coordinate of
//! height `<= H`.
//!
//! With the `parallel` feature the candidate range is split across the rayon
//! pool; results are merged into an ordered set, so output does not depend on
//! scheduling.

use std::collections::BTreeSet;

use crate::classify::{point_order_bounded, PointOrder};
use crate::correspondence::rho_unchecked;
use crate::cubes::{cube_reduce, phi};
use crate::curve::{build_curve, is_elliptic, CurvePoint};
use crate::error::{Error, Result};
use crate::rat::{Rat, RationalsByHeight};
use crate::triple::{satisfies_sum_product, verify_sum_cubes, Triple};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub bound: u64,
    /// Canonically sorted, deduplicated.
    pub solutions: BTreeSet<Triple>,
    /// Always true: the search covers every candidate within the bound.
    pub exhaustive: bool,
}

impl OracleReport {
    /// Whether some permutation of `t` was found.
    pub fn contains(&self, t: &Triple) -> bool {
        self.solutions.contains(&t.sorted())
    }
}

fn solutions_for_x(x: &Rat, s: &Rat, p: &Rat) -> Option<Triple> {
    let rest = s - x;
    let yz = p / x;
    let disc = &rest.square() - &(&yz * 4);
    let root = disc.sqrt()?;
    let y = &(&rest + &root) / 2;
    let z = &(&rest - &root) / 2;
    Some(Triple::new(x.clone(), y, z).sorted())
}

fn candidates(bound: u64) -> Vec<Rat> {
    RationalsByHeight::up_to(bound)
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect()
}

fn report(bound: u64, solutions: BTreeSet<Triple>) -> OracleReport {
    OracleReport {
        bound,
        solutions,
        exhaustive: true,
    }
}

fn require_nonzero_product(t: &Triple) -> Result<(Rat, Rat)> {
    let (s, p) = (t.sum(), t.product());
    if p.is_zero() {
        Err(Error::ZeroProduct)
    } else {
        Ok((s, p))
    }
}

/// Single-threaded search.
pub fn brute_force_solutions_serial(t: &Triple, bound: u64) -> Result<OracleReport> {
    let (s, p) = require_nonzero_product(t)?;
    let solutions = candidates(bound)
        .iter()
        .filter_map(|x| solutions_for_x(x, &s, &p))
        .collect();
    Ok(report(bound, solutions))
}

/// Search split across the rayon pool.
#[cfg(feature = "parallel")]
pub fn brute_force_solutions_parallel(t: &Triple, bound: u64) -> Result<OracleReport> {
    use rayon::prelude::*;
    let (s, p) = require_nonzero_product(t)?;
    let found: Vec<Triple> = candidates(bound)
        .par_iter()
        .filter_map(|x| solutions_for_x(x, &s, &p))
        .collect();
    Ok(report(bound, found.into_iter().collect()))
}

/// All sorted solutions of `x+y+z = s, xyz = p` having a coordinate of height
/// at most `bound`.
pub fn brute_force_solutions(t: &Triple, bound: u64) -> Result<OracleReport> {
    #[cfg(feature = "parallel")]
    {
        brute_force_solutions_parallel(t, bound)
    }
    #[cfg(not(feature = "parallel"))]
    {
        brute_force_solutions_serial(t, bound)
    }
}

fn cube_solutions_for_x(x: &Rat, s: &Rat, k: &Rat) -> Option<Triple> {
    // y + z = w and y^3 + z^3 = w^3 - 3yz w
    let w = s - x;
    if w.is_zero() {
        return None;
    }
    let yz = &(&w.cube() - &(k - &x.cube())) / &(&w * 3);
    let disc = &w.square() - &(&yz * 4);
    let root = disc.sqrt()?;
    let y = &(&w + &root) / 2;
    let z = &(&w - &root) / 2;
    Some(Triple::new(x.clone(), y, z).sorted())
}

fn direct_cube_search(t: &Triple, bound: u64) -> BTreeSet<Triple> {
    let (s, k) = (t.sum(), t.sum_of_cubes());
    let xs = RationalsByHeight::up_to(bound);
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let found: Vec<Triple> = xs
            .par_iter()
            .filter_map(|x| cube_solutions_for_x(x, &s, &k))
            .collect();
        found.into_iter().collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        xs.iter()
            .filter_map(|x| cube_solutions_for_x(x, &s, &k))
            .collect()
    }
}

/// Cube-sum solutions having a coordinate of height at most `bound`, either
/// directly or after the change of coordinates `psi`.
///
/// The reduced half is the `phi`-image of the sum-product search on `psi(t)`;
/// the direct half solves `y+z = s-x`, `y^3+z^3 = K-x^3` per candidate `x`.
pub fn brute_force_cube_solutions(t: &Triple, bound: u64) -> Result<OracleReport> {
    let reduction = cube_reduce(t);
    let reduced = brute_force_solutions(&reduction.reduced, bound)?;
    let mut solutions: BTreeSet<Triple> = reduced
        .solutions
        .iter()
        .map(|sol| phi(sol).sorted())
        .collect();
    solutions.extend(direct_cube_search(t, bound));
    debug_assert!(solutions.iter().all(|sol| verify_sum_cubes(t, sol)));
    Ok(report(bound, solutions))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbedPoint {
    pub triple: Triple,
    pub point: CurvePoint,
    pub order: PointOrder,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub bound: u64,
    pub points: Vec<ProbedPoint>,
}

impl ProbeReport {
    /// A point of infinite order proves the solution set infinite, whatever
    /// the classification said. Finding none proves nothing.
    pub fn found_infinite_order(&self) -> bool {
        self.points
            .iter()
            .any(|pp| pp.order == PointOrder::InfiniteOrder)
    }
}

/// Maps every oracle solution (all orderings) to the curve and reports the
/// bounded order of each resulting point.
pub fn curve_point_probe(t: &Triple, bound: u64) -> Result<ProbeReport> {
    let (s, p) = require_nonzero_product(t)?;
    t.require_distinct()?;
    if !is_elliptic(&s, &p) {
        return Err(Error::Singular);
    }
    let curve = build_curve(&s, &p);
    let oracle = brute_force_solutions(t, bound)?;
    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    for sol in &oracle.solutions {
        for perm in sol.permutations() {
            if !seen.insert(perm.clone()) {
                continue;
            }
            debug_assert!(satisfies_sum_product(&perm, &s, &p));
            let point = rho_unchecked(&perm, &s, &p);
            let order = point_order_bounded(&point, &curve)?;
            points.push(ProbedPoint {
                triple: perm,
                point,
                order,
            });
        }
    }
    Ok(ProbeReport { bound, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn small_bounds_for_123() {
        let t = Triple::new(1, 2, 3);
        let r1 = brute_force_solutions(&t, 1).unwrap();
        assert_eq!(
            r1.solutions.into_iter().collect::<Vec<_>>(),
            vec![Triple::new(1, 2, 3)]
        );
        let r2 = brute_force_solutions(&t, 2).unwrap();
        assert_eq!(
            r2.solutions.into_iter().collect::<Vec<_>>(),
            vec![
                Triple::new(rat!(-3, 2), rat!(-1, 2), rat!(8)),
                Triple::new(1, 2, 3)
            ]
        );
        let r50 = brute_force_solutions(&t, 50).unwrap();
        assert!(r50.exhaustive);
        assert!(r50.contains(&Triple::new(rat!(49, 15), rat!(54, 35), rat!(25, 21))));
    }

    #[test]
    fn parallel_matches_serial() {
        for t in [
            Triple::new(1, 2, 3),
            Triple::new(2, 15, 54),
            Triple::new(rat!(1, 2), rat!(-3), rat!(7)),
        ] {
            assert_eq!(
                brute_force_solutions(&t, 25).unwrap(),
                brute_force_solutions_serial(&t, 25).unwrap()
            );
        }
    }

    #[test]
    fn zero_product_rejected() {
        assert_eq!(
            brute_force_solutions(&Triple::new(1, 0, 2), 5),
            Err(Error::ZeroProduct)
        );
    }

    #[test]
    fn cube_oracle() {
        let t = Triple::new(1, 2, 3);
        let r8 = brute_force_cube_solutions(&t, 8).unwrap();
        assert!(r8.contains(&Triple::new(rat!(15, 2), rat!(-10), rat!(17, 2))));
        for sol in &r8.solutions {
            assert!(verify_sum_cubes(&t, sol));
        }
        assert!(brute_force_cube_solutions(&t, 1).unwrap().contains(&t));
    }

    #[test]
    fn probe_examples() {
        let r = curve_point_probe(&Triple::new(1, 2, 3), 2).unwrap();
        let found = r
            .points
            .iter()
            .find(|pp| pp.point == CurvePoint::affine(rat!(9, 4), rat!(3, 8)))
            .expect("2P is probed");
        assert_eq!(found.order, PointOrder::InfiniteOrder);
        assert!(r.found_infinite_order());

        let r = curve_point_probe(&Triple::new(3, 10, 24), 30).unwrap();
        assert!(!r.points.is_empty());
        assert!(r
            .points
            .iter()
            .all(|pp| matches!(pp.order, PointOrder::Finite(_))));
        assert!(!r.found_infinite_order());
    }
}
