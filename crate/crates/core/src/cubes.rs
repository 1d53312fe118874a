//! Equal sums and equal sums of cubes.
//!
//! `psi((x,y,z)) = ((y+z)/2, (x+z)/2, (x+y)/2)` and
//! `phi((x,y,z)) = (-x+y+z, x-y+z, x+y-z)` are mutually inverse, preserve the
//! sum, and satisfy `x^3+y^3+z^3 = (u+v+w)^3 - 24uvw` for `(u,v,w) = psi(x,y,z)`.
//! Hence the cube-sum solutions for `(a,b,c)` are exactly the `phi`-images of
//! the sum-product solutions for `psi((a,b,c))`.

use crate::error::Result;
use crate::rat::Rat;
use crate::triple::Triple;

pub fn psi(t: &Triple) -> Triple {
    Triple::new(
        &(&t.second + &t.third) / 2,
        &(&t.first + &t.third) / 2,
        &(&t.first + &t.second) / 2,
    )
}

pub fn phi(t: &Triple) -> Triple {
    let s = t.sum();
    t.map(|x| &s - &(x * 2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeReduction {
    pub original: Triple,
    pub reduced: Triple,
}

impl CubeReduction {
    /// Maps a sum-product solution of the reduced system back to a cube-sum
    /// solution of the original.
    pub fn lift(&self, reduced_solution: &Triple) -> Triple {
        phi(reduced_solution)
    }

    pub fn lower(&self, cube_solution: &Triple) -> Triple {
        psi(cube_solution)
    }
}

pub fn cube_reduce(t: &Triple) -> CubeReduction {
    CubeReduction {
        original: t.clone(),
        reduced: psi(t),
    }
}

fn third_holds(a: &Rat, b: &Rat, c: &Rat) -> bool {
    &(a + b) * &(a - b).cube() != &(b + c) * &(b - c).cube()
}

fn fourth_holds(a: &Rat, b: &Rat, c: &Rat) -> bool {
    let lhs = &(&(a * &b.square()) + &(b * &c.square())) + &(c * &a.square());
    let rhs = &(&a.cube() + &b.cube()) + &c.cube();
    lhs != rhs
}

fn violations(t: &Triple, holds: impl Fn(&Rat, &Rat, &Rat) -> bool) -> Result<Vec<Triple>> {
    t.require_distinct()?;
    Ok(t.permutations()
        .into_iter()
        .filter(|p| !holds(&p.first, &p.second, &p.third))
        .collect())
}

/// Permutations with `(A+B)(A-B)^3 = (B+C)(B-C)^3`.
pub fn condition_third_violations(t: &Triple) -> Result<Vec<Triple>> {
    violations(t, third_holds)
}

/// Permutations with `AB^2 + BC^2 + CA^2 = A^3 + B^3 + C^3`.
pub fn condition_fourth_violations(t: &Triple) -> Result<Vec<Triple>> {
    violations(t, fourth_holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{condition_first_violations, condition_second_violations};
    use crate::error::Error;
    use crate::rat;
    use crate::triple::verify_sum_cubes;
    use proptest::prelude::*;

    #[test]
    fn psi_phi_examples() {
        assert_eq!(
            psi(&Triple::new(1, 2, 3)),
            Triple::new(rat!(5, 2), rat!(2), rat!(3, 2))
        );
        assert_eq!(psi(&Triple::new(0, 0, 0)), Triple::new(0, 0, 0));
        assert_eq!(psi(&Triple::new(1, 1, 1)), Triple::new(1, 1, 1));
        assert_eq!(
            phi(&Triple::new(rat!(5, 2), rat!(2), rat!(3, 2))),
            Triple::new(1, 2, 3)
        );
        assert_eq!(phi(&Triple::new(1, 2, 3)), Triple::new(4, 2, 0));
        assert_eq!(phi(&Triple::new(0, 0, 0)), Triple::new(0, 0, 0));
    }

    #[test]
    fn reduction_examples() {
        let r = cube_reduce(&Triple::new(1, 2, 3));
        assert_eq!(r.reduced, Triple::new(rat!(5, 2), rat!(2), rat!(3, 2)));
        assert_eq!(r.lift(&r.reduced), r.original);
        let r = cube_reduce(&Triple::new(1, 1, 1));
        assert_eq!(r.reduced, Triple::new(1, 1, 1));
        let r = cube_reduce(&Triple::new(2, 5, 11));
        assert!(r.reduced.is_pairwise_distinct() && r.reduced.all_positive());

        // (-3/4, 8, -5/4) solves the reduced system (sum 6, product 15/2)
        let lifted = r_lift_123(&Triple::new(rat!(-3, 4), rat!(8), rat!(-5, 4)));
        assert_eq!(lifted, Triple::new(rat!(15, 2), rat!(-10), rat!(17, 2)));
        assert!(verify_sum_cubes(&Triple::new(1, 2, 3), &lifted));
    }

    fn r_lift_123(t: &Triple) -> Triple {
        cube_reduce(&Triple::new(1, 2, 3)).lift(t)
    }

    #[test]
    fn condition_examples() {
        let t = Triple::new(1, 2, 3);
        assert!(condition_third_violations(&t).unwrap().is_empty());
        assert!(condition_fourth_violations(&t).unwrap().is_empty());
        assert!(matches!(
            condition_third_violations(&Triple::new(2, 2, 3)),
            Err(Error::RepeatedEntries(_))
        ));
    }

    #[test]
    fn fourth_condition_witness_by_search() {
        let mut witnesses = Vec::new();
        for a in -20i64..=20 {
            for b in -20i64..=20 {
                for c in -20i64..=20 {
                    if a != b
                        && b != c
                        && a != c
                        && a * b * b + b * c * c + c * a * a == a * a * a + b * b * b + c * c * c
                    {
                        witnesses.push(Triple::new(a, b, c));
                    }
                }
            }
        }
        assert!(!witnesses.is_empty());
        for w in &witnesses {
            assert!(!condition_fourth_violations(w).unwrap().is_empty());
            assert!(!condition_second_violations(&psi(w)).unwrap().is_empty());
        }
    }

    fn arb_triple() -> impl Strategy<Value = Triple> {
        let r = || (-40i64..40, 1i64..12).prop_map(|(n, d)| Rat::new(n, d));
        (r(), r(), r()).prop_map(|(a, b, c)| Triple::new(a, b, c))
    }

    proptest! {
        #[test]
        fn mutually_inverse(t in arb_triple()) {
            prop_assert_eq!(phi(&psi(&t)), t.clone());
            prop_assert_eq!(psi(&phi(&t)), t);
        }

        #[test]
        fn sum_and_cube_identity(t in arb_triple()) {
            let r = psi(&t);
            prop_assert_eq!(r.sum(), t.sum());
            prop_assert_eq!(phi(&t).sum(), t.sum());
            prop_assert_eq!(t.sum_of_cubes(), r.sum().cube() - r.product() * 24);
        }

        #[test]
        fn conditions_match_under_psi(t in arb_triple()) {
            prop_assume!(t.is_pairwise_distinct());
            let r = psi(&t);
            prop_assert_eq!(
                condition_third_violations(&t).unwrap().is_empty(),
                condition_first_violations(&r).unwrap().is_empty()
            );
            prop_assert_eq!(
                condition_fourth_violations(&t).unwrap().is_empty(),
                condition_second_violations(&r).unwrap().is_empty()
            );
        }
    }
}
