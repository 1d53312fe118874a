//! The bijection between rational solutions of `x+y+z = s, xyz = p` (with
//! `p != 0`) and the rational points of the curve for `(s, p)` outside the
//! exceptional set `{(s^2/12, p/2), (s^2/12, -p/2), O}`.
//!
//! Under this map, adding `Q = (s^2/12, p/2)` rotates a solution
//! `(x,y,z) -> (z,x,y)` and negation reverses it.

use crate::curve::CurvePoint;
use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::triple::{satisfies_sum_product, Triple};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExceptionalSet {
    pub plus: CurvePoint,
    pub minus: CurvePoint,
    pub infinity: CurvePoint,
}

impl ExceptionalSet {
    pub fn contains(&self, pt: &CurvePoint) -> bool {
        pt == &self.plus || pt == &self.minus || pt == &self.infinity
    }

    pub fn points(&self) -> [&CurvePoint; 3] {
        [&self.plus, &self.minus, &self.infinity]
    }
}

/// `s^2/12`, the shared `u`-coordinate of the affine exceptional points.
pub(crate) fn exceptional_u(s: &Rat) -> Rat {
    s.square() / 12
}

pub fn exceptional_points(s: &Rat, p: &Rat) -> ExceptionalSet {
    let u = exceptional_u(s);
    let half_p = p / 2;
    ExceptionalSet {
        plus: CurvePoint::Affine {
            u: u.clone(),
            v: half_p.clone(),
        },
        minus: CurvePoint::Affine { u, v: -half_p },
        infinity: CurvePoint::Infinity,
    }
}

/// `(x,y,z) -> (-p/y + s^2/12, -(p/y)(x + y/2 - s/2))`.
pub fn rho(t: &Triple, s: &Rat, p: &Rat) -> Result<CurvePoint> {
    if p.is_zero() {
        return Err(Error::ZeroProduct);
    }
    if !satisfies_sum_product(t, s, p) {
        return Err(Error::NotASolution(t.clone()));
    }
    Ok(rho_unchecked(t, s, p))
}

pub(crate) fn rho_unchecked(t: &Triple, s: &Rat, p: &Rat) -> CurvePoint {
    let ratio = p / &t.second;
    let u = &exceptional_u(s) - &ratio;
    let v = -(&ratio * &(&(&t.first + &(&t.second / 2)) - &(s / 2)));
    CurvePoint::Affine { u, v }
}

/// Inverse of [`rho`]; points of the exceptional set have no preimage.
pub fn rho_inv(pt: &CurvePoint, s: &Rat, p: &Rat) -> Result<Triple> {
    let (u, v) = match pt {
        CurvePoint::Infinity => return Err(Error::ExceptionalPoint),
        CurvePoint::Affine { u, v } => (u, v),
    };
    let shift = u - &exceptional_u(s);
    if shift.is_zero() {
        return Err(Error::ExceptionalPoint);
    }
    // su/2 - s^3/24 + p/2
    let common = &(&(&(s * u) / 2) - &(&s.cube() / 24)) + &(p / 2);
    let x = &(v + &common) / &shift;
    let y = -(p / &shift);
    let z = &(&common - v) / &shift;
    Ok(Triple::new(x, y, z))
}
