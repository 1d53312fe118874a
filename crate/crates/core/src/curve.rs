//! Short Weierstrass curves `v^2 = u^3 + a4 u + a6` over the rationals and
//! their chord-tangent group law.
//!
//! The curve attached to invariants `(s, p)` has
//! `a4 = -(s^4/48 - s p/2)` and `a6 = s^6/864 - s^3 p/24 + p^2/4`.
//! Its discriminant `-16(4 a4^3 + 27 a6^2)` factors as `p^3 (s^3 - 27p)`, so
//! it is nonsingular exactly when `p != 0` and `s^3 != 27p`.

use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { u: Rat, v: Rat },
}

impl CurvePoint {
    pub fn affine(u: impl Into<Rat>, v: impl Into<Rat>) -> CurvePoint {
        CurvePoint::Affine {
            u: u.into(),
            v: v.into(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn u(&self) -> Option<&Rat> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { u, .. } => Some(u),
        }
    }

    pub fn v(&self) -> Option<&Rat> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { v, .. } => Some(v),
        }
    }
}

impl Neg for &CurvePoint {
    type Output = CurvePoint;

    fn neg(self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { u, v } => CurvePoint::Affine {
                u: u.clone(),
                v: -v,
            },
        }
    }
}

impl Neg for CurvePoint {
    type Output = CurvePoint;

    fn neg(self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { u, v } => CurvePoint::Affine { u, v: -v },
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("O"),
            CurvePoint::Affine { u, v } => write!(f, "({u}, {v})"),
        }
    }
}

impl fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn neg(pt: &CurvePoint) -> CurvePoint {
    -pt
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Curve {
    pub a4: Rat,
    pub a6: Rat,
    pub s: Rat,
    pub p: Rat,
}

pub fn build_curve(s: &Rat, p: &Rat) -> Curve {
    let s2 = s.square();
    let s3 = &s2 * s;
    let s4 = s2.square();
    let s6 = s3.square();
    let a4 = -(&s4 / 48 - &(s * p) / 2);
    let a6 = &s6 / 864 - &(&s3 * p) / 24 + &p.square() / 4;
    Curve {
        a4,
        a6,
        s: s.clone(),
        p: p.clone(),
    }
}

/// `s^3 != 27p`.
pub fn is_elliptic(s: &Rat, p: &Rat) -> bool {
    s.cube() != p * 27
}

impl Curve {
    /// `-16 (4 a4^3 + 27 a6^2)`.
    pub fn discriminant(&self) -> Rat {
        let inner = &self.a4.cube() * 4 + &self.a6.square() * 27;
        inner * -16
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().is_zero()
    }

    fn rhs(&self, u: &Rat) -> Rat {
        &(&(&u.square() + &self.a4) * u) + &self.a6
    }

    pub fn on_curve(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { u, v } => v.square() == self.rhs(u),
        }
    }

    fn require_on_curve(&self, pt: &CurvePoint) -> Result<()> {
        if self.on_curve(pt) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// Group law with membership checks on both inputs.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        Ok(self.add_unchecked(p, p))
    }

    /// `n * P` for any integer `n`, by double-and-add.
    pub fn scalar_mul(&self, n: i64, p: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        Ok(self.scalar_mul_unchecked(n, p))
    }

    /// Chord-tangent addition; callers guarantee both points lie on the curve.
    pub(crate) fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (u1, v1, u2, v2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { u: u1, v: v1 }, CurvePoint::Affine { u: u2, v: v2 }) => {
                (u1, v1, u2, v2)
            }
        };
        let slope = if u1 == u2 {
            if v1 == &-v2 {
                // vertical line; covers 2-torsion doubling too
                return CurvePoint::Infinity;
            }
            // tangent
            &(&u1.square() * 3 + &self.a4) / &(v1 * 2)
        } else {
            &(v2 - v1) / &(u2 - u1)
        };
        let u3 = &(&slope.square() - u1) - u2;
        let v3 = &(&slope * &(u1 - &u3)) - v1;
        CurvePoint::Affine { u: u3, v: v3 }
    }

    pub(crate) fn scalar_mul_unchecked(&self, n: i64, p: &CurvePoint) -> CurvePoint {
        let base = if n < 0 { -p } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        let mut addend = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &addend);
            }
            k >>= 1;
            if k > 0 {
                addend = self.add_unchecked(&addend, &addend);
            }
        }
        acc
    }
}

pub fn discriminant(c: &Curve) -> Rat {
    c.discriminant()
}

pub fn on_curve(pt: &CurvePoint, c: &Curve) -> bool {
    c.on_curve(pt)
}

pub fn add(p: &CurvePoint, q: &CurvePoint, c: &Curve) -> Result<CurvePoint> {
    c.add(p, q)
}

pub fn scalar_mul(n: i64, p: &CurvePoint, c: &Curve) -> Result<CurvePoint> {
    c.scalar_mul(n, p)
}
