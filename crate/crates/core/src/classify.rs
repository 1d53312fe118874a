//! Torsion structure of the subgroup generated by the six permutation points
//! `P_ABC` and the order-3 point `Q`, and the resulting classification of a
//! triple.
//!
//! For pairwise-distinct nonzero `(a,b,c)` with `s^3 != 27p` the subgroup is
//! `Z/12` when some permutation has `A(B-C)^3 = B(C-A)^3`, `Z/9` when some
//! permutation has `AB^2 + BC^2 + CA^2 = 3ABC`, and `Z x Z/3` otherwise.
//! Only the last case guarantees infinitely many solutions.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::correspondence::exceptional_u;
use crate::curve::{build_curve, is_elliptic, Curve, CurvePoint};
use crate::error::{Condition, Error, Result};
use crate::families::{family_first_invert, family_second_invert, genus_zero_invert, FamilyParams};
use crate::rat::Rat;
use crate::triple::{elementary_invariants, Triple};

/// Rational torsion has order at most 12.
pub const MAZUR_BOUND: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Torsion {
    Z12,
    Z9,
    ZxZ3,
}

impl fmt::Display for Torsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Torsion::Z12 => "Z/12",
            Torsion::Z9 => "Z/9",
            Torsion::ZxZ3 => "Z x Z/3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    NotPairwiseDistinct,
    ProductZero,
    GenusZero { scale: Rat, t: Rat },
    Elliptic(Torsion),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Infinitude {
    Yes,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub triple: Triple,
    pub verdict: Verdict,
    pub solutions_infinite: Infinitude,
    pub first_violations: Vec<Triple>,
    pub second_violations: Vec<Triple>,
    /// Generating parameters for the genus-zero case, or for the first
    /// violating permutation in the `Z/12` and `Z/9` cases.
    pub family: Option<FamilyParams>,
}

impl Classification {
    pub fn torsion(&self) -> Option<Torsion> {
        match self.verdict {
            Verdict::Elliptic(t) => Some(t),
            _ => None,
        }
    }
}

fn violations(t: &Triple, holds: impl Fn(&Rat, &Rat, &Rat) -> bool) -> Result<Vec<Triple>> {
    t.require_distinct()?;
    Ok(t.permutations()
        .into_iter()
        .filter(|p| !holds(&p.first, &p.second, &p.third))
        .collect())
}

fn first_holds(a: &Rat, b: &Rat, c: &Rat) -> bool {
    a * &(b - c).cube() != b * &(c - a).cube()
}

fn second_holds(a: &Rat, b: &Rat, c: &Rat) -> bool {
    let lhs = &(&(a * &b.square()) + &(b * &c.square())) + &(c * &a.square());
    lhs != &(&(a * b) * c) * 3
}

/// Permutations `(A,B,C)` with `A(B-C)^3 = B(C-A)^3`.
pub fn condition_first_violations(t: &Triple) -> Result<Vec<Triple>> {
    violations(t, first_holds)
}

/// Permutations `(A,B,C)` with `AB^2 + BC^2 + CA^2 = 3ABC`.
pub fn condition_second_violations(t: &Triple) -> Result<Vec<Triple>> {
    violations(t, second_holds)
}

/// Errors with the first violating permutation, if any.
pub(crate) fn require_condition(t: &Triple, condition: Condition) -> Result<()> {
    let found = match condition {
        Condition::First => condition_first_violations(t)?,
        Condition::Second => condition_second_violations(t)?,
        Condition::Third => crate::cubes::condition_third_violations(t)?,
        Condition::Fourth => crate::cubes::condition_fourth_violations(t)?,
    };
    match found.into_iter().next() {
        Some(permutation) => Err(Error::ConditionViolated {
            condition,
            permutation,
        }),
        None => Ok(()),
    }
}

fn as_integer(r: &Rat) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.numer().clone())
    } else {
        Err(Error::NotInteger(r.clone()))
    }
}

/// Pairwise coprime and pairwise distinct nonzero integers; such triples
/// always satisfy both conditions.
pub fn coprime_guarantee(t: &Triple) -> Result<bool> {
    let ints = [
        as_integer(&t.first)?,
        as_integer(&t.second)?,
        as_integer(&t.third)?,
    ];
    if ints.iter().any(BigInt::is_zero) {
        return Err(Error::ZeroEntry(t.clone()));
    }
    let coprime = |x: &BigInt, y: &BigInt| x.gcd(y) == BigInt::from(1);
    Ok(t.is_pairwise_distinct()
        && coprime(&ints[0], &ints[1])
        && coprime(&ints[1], &ints[2])
        && coprime(&ints[0], &ints[2]))
}

/// `P_ABC = (-AC + (A+B+C)^2/12, AC(C-A)/2)`; equals `rho((A,B,C))`.
pub fn permutation_point(perm: &Triple) -> CurvePoint {
    let (a, c) = (&perm.first, &perm.third);
    let ac = a * c;
    let u = &exceptional_u(&perm.sum()) - &ac;
    let v = &(&ac * &(c - a)) / 2;
    CurvePoint::Affine { u, v }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionFamily {
    pub curve: Curve,
    /// `(permutation, P_permutation)` in [`Triple::permutations`] order.
    pub points: [(Triple, CurvePoint); 6],
    pub q: CurvePoint,
}

impl TorsionFamily {
    pub fn point(&self, perm: &Triple) -> Option<&CurvePoint> {
        self.points
            .iter()
            .find(|(p, _)| p == perm)
            .map(|(_, pt)| pt)
    }
}

fn require_nondegenerate(t: &Triple) -> Result<(Rat, Rat)> {
    t.require_distinct()?;
    if t.has_zero() {
        return Err(Error::ZeroEntry(t.clone()));
    }
    let (s, p) = elementary_invariants(t);
    if !is_elliptic(&s, &p) {
        return Err(Error::Singular);
    }
    Ok((s, p))
}

pub fn torsion_family(t: &Triple) -> Result<TorsionFamily> {
    let (s, p) = require_nondegenerate(t)?;
    let curve = build_curve(&s, &p);
    let points = t.permutations().map(|perm| {
        let pt = permutation_point(&perm);
        (perm, pt)
    });
    let q = CurvePoint::Affine {
        u: exceptional_u(&s),
        v: &p / 2,
    };
    for pt in points.iter().map(|(_, pt)| pt).chain([&q]) {
        if !curve.on_curve(pt) {
            return Err(Error::NotOnCurve);
        }
    }
    Ok(TorsionFamily { curve, points, q })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointOrder {
    Finite(u32),
    InfiniteOrder,
}

/// Least `n <= 12` with `nP = O`, or `InfiniteOrder` if there is none.
pub fn point_order_bounded(pt: &CurvePoint, c: &Curve) -> Result<PointOrder> {
    if !c.on_curve(pt) {
        return Err(Error::NotOnCurve);
    }
    let mut multiple = pt.clone();
    for n in 1..=MAZUR_BOUND {
        if multiple.is_infinity() {
            return Ok(PointOrder::Finite(n));
        }
        multiple = c.add_unchecked(&multiple, pt);
    }
    Ok(PointOrder::InfiniteOrder)
}

/// Total classification with precedence: repeated entries, zero product,
/// genus zero, then the torsion trichotomy.
pub fn classify_triple(t: &Triple) -> Classification {
    let mut out = Classification {
        triple: t.clone(),
        verdict: Verdict::NotPairwiseDistinct,
        solutions_infinite: Infinitude::Unknown,
        first_violations: Vec::new(),
        second_violations: Vec::new(),
        family: None,
    };
    if !t.is_pairwise_distinct() {
        return out;
    }
    let (s, p) = elementary_invariants(t);
    if p.is_zero() {
        out.verdict = Verdict::ProductZero;
        out.solutions_infinite = Infinitude::Yes;
        return out;
    }
    if !is_elliptic(&s, &p) {
        let fp = genus_zero_invert(t).expect("distinct nonzero genus-zero triple is parametrized");
        out.verdict = Verdict::GenusZero {
            scale: fp.scale.clone(),
            t: fp.t.clone(),
        };
        out.family = Some(fp);
        out.solutions_infinite = Infinitude::Yes;
        return out;
    }
    out.first_violations = condition_first_violations(t).expect("distinct");
    out.second_violations = condition_second_violations(t).expect("distinct");
    let torsion = if let Some(perm) = out.first_violations.first() {
        out.family = family_first_invert(perm).ok();
        Torsion::Z12
    } else if let Some(perm) = out.second_violations.first() {
        out.family = family_second_invert(perm).ok();
        Torsion::Z9
    } else {
        out.solutions_infinite = Infinitude::Yes;
        Torsion::ZxZ3
    };
    out.verdict = Verdict::Elliptic(torsion);
    out
}

/// Classifies many triples; runs on the rayon pool with the `parallel` feature.
pub fn classify_batch(triples: &[Triple]) -> Vec<Classification> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        triples.par_iter().map(classify_triple).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        classify_batch_serial(triples)
    }
}

pub fn classify_batch_serial(triples: &[Triple]) -> Vec<Classification> {
    triples.iter().map(classify_triple).collect()
}

fn require_formula_input(a: &Rat, b: &Rat, c: &Rat) -> Result<()> {
    require_nondegenerate(&Triple::new(a.clone(), b.clone(), c.clone())).map(|_| ())
}

/// Closed form for `2 P_ABC`:
/// `((A+B+C)^2/12 - AC(A-B)(B-C)/(A-C)^2, AC/(2(A-C)^3) (A(C-B)^3 - C(B-A)^3))`.
pub fn double_formula(a: &Rat, b: &Rat, c: &Rat) -> Result<CurvePoint> {
    require_formula_input(a, b, c)?;
    let ac = a * c;
    let a_c = a - c;
    let u = &exceptional_u(&(&(a + b) + c)) - &(&(&(&ac * &(a - b)) * &(b - c)) / &a_c.square());
    let bracket = &(a * &(c - b).cube()) - &(c * &(b - a).cube());
    let v = &(&ac / &(&a_c.cube() * 2)) * &bracket;
    Ok(CurvePoint::Affine { u, v })
}

/// Closed form for `-P_ABC + Q`: `((A+B+C)^2/12 - AB, AB(B-A)/2)`.
pub fn minus_p_plus_q_formula(a: &Rat, b: &Rat, c: &Rat) -> Result<CurvePoint> {
    require_formula_input(a, b, c)?;
    let ab = a * b;
    let u = &exceptional_u(&(&(a + b) + c)) - &ab;
    let v = &(&ab * &(b - a)) / 2;
    Ok(CurvePoint::Affine { u, v })
}
