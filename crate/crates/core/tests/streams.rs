use std::collections::HashSet;

use proptest::prelude::*;
use sumprod::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rat::new(n, d))
}

fn distinct_triple() -> impl Strategy<Value = Triple> {
    (small_rat(), small_rat(), small_rat())
        .prop_map(|(a, b, c)| Triple::new(a, b, c))
        .prop_filter("pairwise distinct", Triple::is_pairwise_distinct)
}

fn group_element(t: &Triple, m: i64, k: u8) -> CurvePoint {
    let (s, p) = elementary_invariants(t);
    let curve = build_curve(&s, &p);
    let base = rho(t, &s, &p).unwrap();
    let q = CurvePoint::affine(s.square() / 12, &p / 2);
    curve
        .add(
            &curve.scalar_mul(m, &base).unwrap(),
            &curve.scalar_mul(i64::from(k), &q).unwrap(),
        )
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn streams_are_deterministic_verified_and_repeat_free(t in distinct_triple()) {
        let a: Vec<_> = solution_stream(&t).unwrap().take(24).collect();
        let b: Vec<_> = solution_stream(&t).unwrap().take(24).collect();
        prop_assert_eq!(&a, &b);
        let mut seen = HashSet::new();
        for rec in &a {
            prop_assert!(rec.verified && verify_sum_product(&t, &rec.triple));
            prop_assert!(seen.insert(rec.triple.clone()), "repeat {}", rec.triple);
        }
    }

    #[test]
    fn group_records_roundtrip_to_their_source(t in distinct_triple()) {
        let (s, p) = elementary_invariants(&t);
        for rec in solution_stream(&t).unwrap().take(18) {
            if let Source::Group { m, k } = rec.source {
                prop_assert_eq!(rho(&rec.triple, &s, &p).unwrap(), group_element(&t, m, k));
            }
        }
    }

    #[test]
    fn stream_records_within_bound_are_in_oracle(t in distinct_triple()) {
        prop_assume!(!t.has_zero());
        let bound = 12;
        let oracle = brute_force_solutions(&t, bound).unwrap();
        prop_assert_eq!(oracle.contains(&t), t.iter().any(|x| x.height_u64() <= bound));
        for rec in solution_stream(&t).unwrap().take(30) {
            if rec.triple.iter().any(|x| x.height_u64() <= bound) {
                prop_assert!(oracle.contains(&rec.triple), "{} missing", rec.triple);
            }
        }
        for sol in &oracle.solutions {
            prop_assert!(verify_sum_product(&t, sol));
            prop_assert_eq!(sol, &sol.sorted());
        }
    }

    #[test]
    fn cube_streams_verify(t in distinct_triple()) {
        prop_assume!(condition_third_violations(&t).unwrap().is_empty());
        prop_assume!(condition_fourth_violations(&t).unwrap().is_empty());
        let reduced = psi(&t);
        prop_assume!(!reduced.product().is_zero());
        for rec in cube_stream(&t).unwrap().take(12) {
            prop_assert!(rec.verified && verify_sum_cubes(&t, &rec.triple));
        }
    }
}

#[test]
fn finite_streams_match_the_group_size() {
    // Z/12 leaves 12 - 3 elements outside the exceptional set, Z/9 leaves 6
    for (t, n) in [
        (Triple::new(3, 10, 24), 9),
        (Triple::new(2, 15, 54), 9),
        (Triple::new(1, -2, 4), 6),
        (Triple::new(-3, 4, 18), 6),
    ] {
        let recs: Vec<_> = solution_stream(&t).unwrap().collect();
        assert_eq!(recs.len(), n, "{t}");
        assert!(recs.iter().all(|r| verify_sum_product(&t, &r.triple)));
    }
}

#[test]
fn positive_streams() {
    let recs: Vec<_> = positive_stream(&Triple::new(2, 3, 25), 1, DEFAULT_CAP)
        .unwrap()
        .collect::<Result<Vec<_>>>()
        .unwrap();
    assert!(
        recs[0].triple.all_positive() && !recs[0].triple.is_permutation_of(&Triple::new(2, 3, 25))
    );

    for t in [Triple::new(1, 2, 3), Triple::new(2, 3, 4)] {
        let recs: Vec<_> = positive_cube_stream(&t, 1, DEFAULT_CAP)
            .unwrap()
            .collect::<Result<Vec<_>>>()
            .unwrap();
        assert!(recs[0].triple.all_positive() && verify_sum_cubes(&t, &recs[0].triple));
    }
    assert_eq!(
        positive_cube_stream(&Triple::new(1, 2, 3), 0, DEFAULT_CAP)
            .unwrap()
            .count(),
        0
    );
}

#[test]
fn probe_finds_non_torsion_points_in_finite_subgroup_cases() {
    // (-18, -1, 90) solves the (2, 15, 54) system
    let report = curve_point_probe(&Triple::new(2, 15, 54), 1).unwrap();
    let hit = report
        .points
        .iter()
        .find(|pp| pp.triple == Triple::new(-18, -1, 90))
        .unwrap();
    assert_eq!(hit.order, PointOrder::InfiniteOrder);
    assert!(curve_point_probe(&Triple::new(-3, 4, 18), 5)
        .unwrap()
        .found_infinite_order());
    assert!(!curve_point_probe(&Triple::new(-3, 4, 18), 1)
        .unwrap()
        .found_infinite_order());
}
