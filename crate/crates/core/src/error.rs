use std::fmt;

use thiserror::Error;

use crate::rat::Rat;
use crate::triple::Triple;

/// Which of the four non-degeneracy inequalities a triple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `A(B-C)^3 != B(C-A)^3`
    First,
    /// `AB^2 + BC^2 + CA^2 != 3ABC`
    Second,
    /// `(A+B)(A-B)^3 != (B+C)(B-C)^3`
    Third,
    /// `AB^2 + BC^2 + CA^2 != A^3 + B^3 + C^3`
    Fourth,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::First => "A(B-C)^3 != B(C-A)^3",
            Condition::Second => "AB^2+BC^2+CA^2 != 3ABC",
            Condition::Third => "(A+B)(A-B)^3 != (B+C)(B-C)^3",
            Condition::Fourth => "AB^2+BC^2+CA^2 != A^3+B^3+C^3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRatError {
    #[error("empty input")]
    Empty,
    #[error("malformed rational {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseRatError),

    #[error("point is not on the curve")]
    NotOnCurve,

    #[error("point lies in the exceptional set and has no preimage")]
    ExceptionalPoint,

    #[error("product of the entries is zero")]
    ZeroProduct,

    #[error("curve is singular (s^3 = 27p)")]
    Singular,

    #[error("triple {0} is not a solution of the system")]
    NotASolution(Triple),

    #[error("triple {0} has repeated entries")]
    RepeatedEntries(Triple),

    #[error("triple {0} has a zero entry")]
    ZeroEntry(Triple),

    #[error("entry {0} is not an integer")]
    NotInteger(Rat),

    #[error("triple {0} has a nonpositive entry")]
    NotPositive(Triple),

    #[error("{name} = {value} is excluded: {reason}")]
    ExcludedParameter {
        name: &'static str,
        value: Rat,
        reason: &'static str,
    },

    #[error("triple {0} does not satisfy the family relation")]
    RelationNotSatisfied(Triple),

    #[error("triple {0} is outside the parametrized family")]
    NotInFamily(Triple),

    #[error("condition {condition} fails for permutation {permutation}")]
    ConditionViolated {
        condition: Condition,
        permutation: Triple,
    },

    #[error("search cap exhausted after examining {examined} group elements ({emitted} emitted)")]
    CapExhausted { emitted: usize, examined: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
