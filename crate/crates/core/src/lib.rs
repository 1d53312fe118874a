//! Rational solutions of `x+y+z = a+b+c`, `xyz = abc` and of the cube-sum
//! variant `x+y+z = a+b+c`, `x^3+y^3+z^3 = a^3+b^3+c^3`.
//!
//! Solutions of the sum-product system correspond to points on the elliptic
//! curve `E_abc` (see [`correspondence`]); the torsion structure of the
//! subgroup generated by the permutation points decides whether infinitely
//! many solutions are guaranteed ([`classify`]), and the group law generates
//! them ([`stream`]). [`oracle`] is an independent brute-force cross-check.

#![allow(clippy::result_large_err)]

pub mod classify;
pub mod cli;
pub mod correspondence;
pub mod cubes;
pub mod curve;
pub mod error;
pub mod families;
pub mod oracle;
pub mod rat;
pub mod stream;
pub mod triple;

pub use classify::{
    classify_batch, classify_batch_serial, classify_triple, condition_first_violations,
    condition_second_violations, coprime_guarantee, double_formula, minus_p_plus_q_formula,
    permutation_point, point_order_bounded, torsion_family, Classification, Infinitude, PointOrder,
    Torsion, TorsionFamily, Verdict, MAZUR_BOUND,
};
pub use correspondence::{exceptional_points, rho, rho_inv, ExceptionalSet};
pub use cubes::{
    condition_fourth_violations, condition_third_violations, cube_reduce, phi, psi, CubeReduction,
};
pub use curve::{build_curve, is_elliptic, Curve, CurvePoint};
pub use error::{Condition, Error, ParseRatError, Result};
pub use families::{
    family_first, family_first_invert, family_second, family_second_invert,
    genus_zero_constant_solution, genus_zero_invert, genus_zero_solution,
    genus_zero_solution_invert, genus_zero_triple, product_zero_solution, FamilyKind, FamilyParams,
};
#[cfg(feature = "parallel")]
pub use oracle::brute_force_solutions_parallel;
pub use oracle::{
    brute_force_cube_solutions, brute_force_solutions, brute_force_solutions_serial,
    curve_point_probe, OracleReport, ProbeReport, ProbedPoint,
};
pub use rat::{rat_parse, Rat, RationalsByHeight};
pub use stream::{
    cube_stream, positive_cube_stream, positive_stream, solution_stream, PositiveStream,
    SolutionRecord, SolutionStream, Source, DEFAULT_CAP,
};
pub use triple::{
    elementary_invariants, satisfies_sum_product, verify_sum_cubes, verify_sum_product, Triple,
};
