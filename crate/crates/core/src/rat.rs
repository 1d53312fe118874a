//! Exact rationals in canonical lowest terms.
//!
//! [`Rat`] wraps a `BigRational`, which reduces on construction and keeps the
//! sign on the numerator, so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseRatError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rat {
        Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rat {
        Rat(BigRational::zero())
    }

    pub fn one() -> Rat {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Option<Rat> {
        if self.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    pub fn checked_div(&self, rhs: &Rat) -> Option<Rat> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rat(&self.0 / &rhs.0))
        }
    }

    /// Integer power; negative exponents of zero panic.
    pub fn pow(&self, exp: i32) -> Rat {
        Rat(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn square(&self) -> Rat {
        Rat(&self.0 * &self.0)
    }

    pub fn cube(&self) -> Rat {
        Rat(&self.0 * &self.0 * &self.0)
    }

    /// `max(|numerator|, denominator)`.
    pub fn height(&self) -> BigInt {
        let n = self.numer().abs();
        let d = self.denom();
        if &n > d {
            n
        } else {
            d.clone()
        }
    }

    /// Height as a machine integer, saturating.
    pub fn height_u64(&self) -> u64 {
        self.height().to_u64().unwrap_or(u64::MAX)
    }

    /// Exact rational square root, if one exists.
    ///
    /// A reduced `n/d` is a square iff `n >= 0` and both `n` and `d` are
    /// perfect squares.
    pub fn sqrt(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer();
        let d = self.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Some(Rat::new(rn, rd))
        } else {
            None
        }
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_integer(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_integer(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat::from_integer(n)
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Rat {
        Rat(r)
    }
}

fn parse_signed_digits(part: &str) -> Option<BigInt> {
    let digits = part.strip_prefix(['+', '-']).unwrap_or(part);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    part.parse().ok()
}

/// Parses `"n"` or `"n/d"`; both parts may carry a sign.
pub fn rat_parse(text: &str) -> Result<Rat, ParseRatError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseRatError::Empty);
    }
    let malformed = || ParseRatError::Malformed(text.to_string());
    match text.split_once('/') {
        None => parse_signed_digits(text)
            .map(Rat::from_integer)
            .ok_or_else(malformed),
        Some((n, d)) => {
            let n = parse_signed_digits(n).ok_or_else(malformed)?;
            let d = parse_signed_digits(d).ok_or_else(malformed)?;
            if d.is_zero() {
                return Err(ParseRatError::ZeroDenominator(text.to_string()));
            }
            Ok(Rat::new(n, d))
        }
    }
}

impl FromStr for Rat {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Rat, ParseRatError> {
        rat_parse(s)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($imp::$method(&self.0, &rhs.0))
            }
        }
        impl $imp<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($imp::$method(&self.0, rhs.0))
            }
        }
        impl $imp<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($imp::$method(self.0, &rhs.0))
            }
        }
        impl $imp<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($imp::$method(self.0, rhs.0))
            }
        }
        impl $imp<i64> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: i64) -> Rat {
                Rat($imp::$method(
                    &self.0,
                    BigRational::from_integer(rhs.into()),
                ))
            }
        }
        impl $imp<i64> for Rat {
            type Output = Rat;
            fn $method(self, rhs: i64) -> Rat {
                Rat($imp::$method(self.0, BigRational::from_integer(rhs.into())))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.denom().is_one() && *self.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer((*other).into())))
    }
}

impl std::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for tests and examples: `rat!(3)`, `rat!(-3, 2)`, `rat!("49/15")`.
#[macro_export]
macro_rules! rat {
    ($n:literal, $d:literal) => {
        $crate::Rat::new($n as i64, $d as i64)
    };
    ($s:literal) => {
        $crate::rat::RatLiteral::into_rat($s)
    };
}

#[doc(hidden)]
pub trait RatLiteral {
    fn into_rat(self) -> Rat;
}

impl RatLiteral for i64 {
    fn into_rat(self) -> Rat {
        Rat::from(self)
    }
}

impl RatLiteral for i32 {
    fn into_rat(self) -> Rat {
        Rat::from(self)
    }
}

impl RatLiteral for &str {
    fn into_rat(self) -> Rat {
        rat_parse(self).expect("invalid rational literal")
    }
}

/// Every rational exactly once, ordered by height, then by value.
///
/// Height 1 yields `-1, 0, 1`; height `h > 1` yields the reduced fractions
/// `n/d` with `max(|n|, d) = h`.
#[derive(Debug, Clone)]
pub struct RationalsByHeight {
    height: u64,
    pending: std::vec::IntoIter<Rat>,
}

impl RationalsByHeight {
    pub fn new() -> Self {
        RationalsByHeight {
            height: 0,
            pending: Vec::new().into_iter(),
        }
    }

    /// All rationals of exactly height `h`, sorted ascending.
    pub fn level(h: u64) -> Vec<Rat> {
        use num_integer::Integer;
        if h == 0 {
            return Vec::new();
        }
        if h == 1 {
            return vec![Rat::from(-1), Rat::zero(), Rat::one()];
        }
        let h_i = h as i64;
        let mut out = Vec::new();
        // denominator exactly h, |numerator| <= h
        for n in -h_i..=h_i {
            if n != 0 && n.unsigned_abs().gcd(&h) == 1 {
                out.push(Rat::new(n, h_i));
            }
        }
        // |numerator| exactly h, denominator < h
        for d in 1..h_i {
            if (d as u64).gcd(&h) == 1 {
                out.push(Rat::new(h_i, d));
                out.push(Rat::new(-h_i, d));
            }
        }
        out.sort();
        out
    }

    /// All rationals of height at most `h`.
    pub fn up_to(h: u64) -> Vec<Rat> {
        (1..=h).flat_map(Self::level).collect()
    }
}

impl Default for RationalsByHeight {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for RationalsByHeight {
    type Item = Rat;

    fn next(&mut self) -> Option<Rat> {
        loop {
            if let Some(r) = self.pending.next() {
                return Some(r);
            }
            self.height += 1;
            self.pending = Self::level(self.height).into_iter();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(rat_parse("3/6").unwrap(), Rat::new(1, 2));
        assert_eq!(rat_parse("-4/-8").unwrap(), Rat::new(1, 2));
        assert_eq!(rat_parse("7").unwrap(), Rat::from(7));
        assert_eq!(rat_parse("4/-8").unwrap().to_string(), "-1/2");
        assert_eq!(rat_parse(" +5/10 ").unwrap(), Rat::new(1, 2));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(rat_parse(""), Err(ParseRatError::Empty));
        assert!(matches!(
            rat_parse("1/0"),
            Err(ParseRatError::ZeroDenominator(_))
        ));
        assert!(matches!(
            rat_parse("-3/-0"),
            Err(ParseRatError::ZeroDenominator(_))
        ));
        for bad in [
            "abc", "1/", "/2", "1.5", "1/2/3", "--1", "1 /2", "+", "0x10",
        ] {
            assert!(
                matches!(rat_parse(bad), Err(ParseRatError::Malformed(_))),
                "{bad:?} should be malformed"
            );
        }
    }

    #[test]
    fn canonical_display() {
        assert_eq!(Rat::new(-6, -4).to_string(), "3/2");
        assert_eq!(Rat::new(6, -4).to_string(), "-3/2");
        assert_eq!(Rat::new(0, -5).to_string(), "0");
        assert!(Rat::new(3, -9).denom() > &BigInt::zero());
    }

    #[test]
    fn height_and_sqrt() {
        assert_eq!(Rat::new(-49, 15).height(), BigInt::from(49));
        assert_eq!(Rat::new(3, 35).height(), BigInt::from(35));
        assert_eq!(Rat::zero().height(), BigInt::from(1));
        assert_eq!(Rat::new(361, 4).sqrt(), Some(Rat::new(19, 2)));
        assert_eq!(Rat::from(73).sqrt(), None);
        assert_eq!(Rat::new(9, 8).sqrt(), None);
        assert_eq!(Rat::from(-4).sqrt(), None);
        assert_eq!(Rat::zero().sqrt(), Some(Rat::zero()));
    }

    #[test]
    fn enumeration_order() {
        let first: Vec<String> = RationalsByHeight::new()
            .take(15)
            .map(|r| r.to_string())
            .collect();
        assert_eq!(
            first,
            [
                "-1", "0", "1", "-2", "-1/2", "1/2", "2", "-3", "-3/2", "-2/3", "-1/3", "1/3",
                "2/3", "3/2", "3"
            ]
        );
    }

    #[test]
    fn enumeration_is_complete_and_distinct() {
        let all = RationalsByHeight::up_to(12);
        let mut seen = std::collections::HashSet::new();
        for r in &all {
            assert!(seen.insert(r.clone()));
            assert!(r.height_u64() <= 12);
        }
        for d in 1..=12i64 {
            for n in -12..=12i64 {
                assert!(seen.contains(&Rat::new(n, d)));
            }
        }
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-10_000i64..10_000, 1i64..500).prop_map(|(n, d)| Rat::new(n, d))
    }

    proptest! {
        #[test]
        fn format_parse_roundtrip(x in small_rat()) {
            prop_assert_eq!(rat_parse(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn add_sub_inverse(x in small_rat(), y in small_rat()) {
            prop_assert_eq!(&(&x + &y) - &y, x);
        }

        #[test]
        fn mul_div_inverse(x in small_rat(), y in small_rat()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!(&(&x * &y) / &y, x);
        }

        #[test]
        fn always_reduced(x in small_rat()) {
            use num_integer::Integer;
            prop_assert!(x.denom() > &BigInt::zero());
            prop_assert!(x.numer().gcd(x.denom()).is_one());
        }
    }
}
