//! Closed-form parameter families.
//!
//! * Genus zero: every pairwise-distinct nonzero triple with `s^3 = 27p` is
//!   `(c(t-1)^3, -c t^3, c)`, and its solution set is the constant triple
//!   `c(t-t^2)` (thrice) together with a one-parameter family in `u`.
//! * `First`: the triples with `a(b-c)^3 = b(c-a)^3` are
//!   `(r(t+1)^3, -r t^3, -r t(t+1)(2t^2+2t+1))`.
//! * `Second`: the triples with `ab^2 + bc^2 + ca^2 = 3abc` are
//!   `(r t^2, -r(t+1), r t(t+1)^2)`.
//!
//! In each case the parameters are uniquely determined by the triple, and
//! the inverse maps below recover them.

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::triple::{satisfies_sum_product, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    GenusZero,
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub kind: FamilyKind,
    /// `c` for the genus-zero family, `r` otherwise.
    pub scale: Rat,
    pub t: Rat,
}

impl FamilyParams {
    pub fn new(kind: FamilyKind, scale: Rat, t: Rat) -> Result<FamilyParams> {
        let params = FamilyParams { kind, scale, t };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.scale.is_zero() {
            let name = match self.kind {
                FamilyKind::GenusZero => "c",
                _ => "r",
            };
            return Err(Error::ExcludedParameter {
                name,
                value: Rat::zero(),
                reason: "every entry would be zero",
            });
        }
        let excluded: &[(Rat, &'static str)] = match self.kind {
            FamilyKind::GenusZero => &[
                (Rat::from(-1), "b = c"),
                (Rat::zero(), "b = 0"),
                (Rat::new(1, 2), "a = b"),
                (Rat::one(), "a = 0"),
                (Rat::from(2), "a = c"),
            ],
            FamilyKind::First => &[
                (Rat::from(-1), "a = 0 and c = 0"),
                (Rat::new(-1, 2), "a = b"),
                (Rat::zero(), "b = 0 and c = 0"),
            ],
            FamilyKind::Second => &[
                (Rat::from(-1), "b = 0 and c = 0"),
                (Rat::zero(), "a = 0 and c = 0"),
            ],
        };
        match excluded.iter().find(|(v, _)| v == &self.t) {
            Some((v, reason)) => Err(Error::ExcludedParameter {
                name: "t",
                value: v.clone(),
                reason,
            }),
            None => Ok(()),
        }
    }

    /// The triple these parameters generate.
    pub fn triple(&self) -> Triple {
        match self.kind {
            FamilyKind::GenusZero => genus_zero_triple_unchecked(&self.scale, &self.t),
            FamilyKind::First => family_first_unchecked(&self.scale, &self.t),
            FamilyKind::Second => family_second_unchecked(&self.scale, &self.t),
        }
    }
}

fn genus_zero_triple_unchecked(c: &Rat, t: &Rat) -> Triple {
    let t_minus_1 = t - 1;
    Triple::new(c * &t_minus_1.cube(), -(c * &t.cube()), c.clone())
}

/// `(c(t-1)^3, -c t^3, c)`.
pub fn genus_zero_triple(scale: &Rat, t: &Rat) -> Result<Triple> {
    FamilyParams::new(FamilyKind::GenusZero, scale.clone(), t.clone()).map(|fp| fp.triple())
}

/// Recovers `(c, t)` with `t = (-a + 2b - c)/(a + b - 2c)` and `c` the third entry.
pub fn genus_zero_invert(t: &Triple) -> Result<FamilyParams> {
    let (a, b, c) = (&t.first, &t.second, &t.third);
    if t.has_zero() {
        return Err(Error::ZeroEntry(t.clone()));
    }
    t.require_distinct()?;
    let s = t.sum();
    if s.cube() != t.product() * 27 {
        return Err(Error::RelationNotSatisfied(t.clone()));
    }
    let den = &(a + b) - &(c * 2);
    let num = &(&(b * 2) - a) - c;
    // den = 0 forces a = b = c, excluded above
    let param = num
        .checked_div(&den)
        .ok_or_else(|| Error::RepeatedEntries(t.clone()))?;
    let fp = FamilyParams::new(FamilyKind::GenusZero, c.clone(), param)?;
    debug_assert_eq!(&fp.triple(), t);
    Ok(fp)
}

/// `c(t - t^2)` in all three coordinates: the one solution outside the
/// `u`-family.
pub fn genus_zero_constant_solution(scale: &Rat, t: &Rat) -> Result<Triple> {
    FamilyParams::new(FamilyKind::GenusZero, scale.clone(), t.clone())?;
    let k = scale * &(t - &t.square());
    Ok(Triple::new(k.clone(), k.clone(), k))
}

/// `(c t(t-1)^3 / ((u+1)(u+t)), -c t(u+t)^2/(u+1), c t(u+1)^2/(u+t))`.
///
/// `u = 0` returns the generating triple itself.
pub fn genus_zero_solution(scale: &Rat, t: &Rat, u: &Rat) -> Result<Triple> {
    FamilyParams::new(FamilyKind::GenusZero, scale.clone(), t.clone())?;
    let u_plus_1 = u + 1;
    let u_plus_t = u + t;
    if u_plus_1.is_zero() {
        return Err(Error::ExcludedParameter {
            name: "u",
            value: u.clone(),
            reason: "u = -1 is a pole of the parametrization",
        });
    }
    if u_plus_t.is_zero() {
        return Err(Error::ExcludedParameter {
            name: "u",
            value: u.clone(),
            reason: "u = -t is a pole of the parametrization",
        });
    }
    let ct = scale * t;
    let x = &(&ct * &(t - 1).cube()) / &(&u_plus_1 * &u_plus_t);
    let y = -(&(&ct * &u_plus_t.square()) / &u_plus_1);
    let z = &(&ct * &u_plus_1.square()) / &u_plus_t;
    Ok(Triple::new(x, y, z))
}

/// The unique `u` with `genus_zero_solution(scale, t, u) == sol`.
pub fn genus_zero_solution_invert(scale: &Rat, t: &Rat, sol: &Triple) -> Result<Rat> {
    let base = genus_zero_triple(scale, t)?;
    let (s, p) = (base.sum(), base.product());
    if !satisfies_sum_product(sol, &s, &p) {
        return Err(Error::NotASolution(sol.clone()));
    }
    if sol == &base {
        return Ok(Rat::zero());
    }
    if sol == &genus_zero_constant_solution(scale, t)? {
        return Err(Error::NotInFamily(sol.clone()));
    }
    // The formula for u holds at scale 1; rescale the solution first.
    let y = &sol.second / scale;
    let z = &sol.third / scale;
    let t2 = t.square();
    let t3 = &t2 * t;
    let t4 = &t3 * t;
    let yz = &y * &z;
    let num = &(&(&(&(&(&t4 * 2) + &(&t3 * &z)) - &(&t3 * 2)) + &(t * &yz)) + &(t * &y)) - &yz;
    let den = t * &(&(&(&t3 + &(t * &z)) - t) + &y);
    let u = -num
        .checked_div(&den)
        .ok_or_else(|| Error::NotInFamily(sol.clone()))?;
    match genus_zero_solution(scale, t, &u) {
        Ok(back) if &back == sol => Ok(u),
        _ => Err(Error::NotInFamily(sol.clone())),
    }
}

fn family_first_unchecked(r: &Rat, t: &Rat) -> Triple {
    let t1 = t + 1;
    let quad = &(&(&t.square() * 2) + &(t * 2)) + &Rat::one();
    Triple::new(
        r * &t1.cube(),
        -(r * &t.cube()),
        -(&(&(r * t) * &t1) * &quad),
    )
}

/// `(r(t+1)^3, -r t^3, -r t(t+1)(2t^2+2t+1))`.
pub fn family_first(r: &Rat, t: &Rat) -> Result<Triple> {
    FamilyParams::new(FamilyKind::First, r.clone(), t.clone()).map(|fp| fp.triple())
}

fn require_family_input(t: &Triple) -> Result<()> {
    if t.has_zero() {
        return Err(Error::ZeroEntry(t.clone()));
    }
    t.require_distinct()
}

/// `t = (b-c)/(a-b)`, `r = a/(t+1)^3`.
pub fn family_first_invert(t: &Triple) -> Result<FamilyParams> {
    require_family_input(t)?;
    let (a, b, c) = (&t.first, &t.second, &t.third);
    if a * &(b - c).cube() != b * &(c - a).cube() {
        return Err(Error::RelationNotSatisfied(t.clone()));
    }
    let param = &(b - c) / &(a - b);
    let r = a / &(&param + 1).cube();
    FamilyParams::new(FamilyKind::First, r, param)
}

fn family_second_unchecked(r: &Rat, t: &Rat) -> Triple {
    let t1 = t + 1;
    Triple::new(r * &t.square(), -(r * &t1), &(r * t) * &t1.square())
}

/// `(r t^2, -r(t+1), r t(t+1)^2)`.
pub fn family_second(r: &Rat, t: &Rat) -> Result<Triple> {
    FamilyParams::new(FamilyKind::Second, r.clone(), t.clone()).map(|fp| fp.triple())
}

/// `t = (a-c)/(b-a)`, `r = a/t^2`.
pub fn family_second_invert(t: &Triple) -> Result<FamilyParams> {
    require_family_input(t)?;
    let (a, b, c) = (&t.first, &t.second, &t.third);
    let lhs = &(&(a * &b.square()) + &(b * &c.square())) + &(c * &a.square());
    if lhs != t.product() * 3 {
        return Err(Error::RelationNotSatisfied(t.clone()));
    }
    let param = &(a - c) / &(b - a);
    let r = a / &param.square();
    FamilyParams::new(FamilyKind::Second, r, param)
}

/// `(x, s - x, 0)`: with a zero product every solution is a permutation of one
/// of these.
pub fn product_zero_solution(s: &Rat, x: &Rat) -> Triple {
    Triple::new(x.clone(), s - x, Rat::zero())
}
