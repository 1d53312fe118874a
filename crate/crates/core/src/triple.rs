use std::fmt;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// An ordered triple of rationals; permutations are distinct values.
///
/// The derived ordering is lexicographic, which together with [`Triple::sorted`]
/// gives set semantics where needed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub first: Rat,
    pub second: Rat,
    pub third: Rat,
}

impl Triple {
    pub fn new(first: impl Into<Rat>, second: impl Into<Rat>, third: impl Into<Rat>) -> Triple {
        Triple {
            first: first.into(),
            second: second.into(),
            third: third.into(),
        }
    }

    pub fn from_array([first, second, third]: [Rat; 3]) -> Triple {
        Triple {
            first,
            second,
            third,
        }
    }

    pub fn to_array(&self) -> [Rat; 3] {
        [self.first.clone(), self.second.clone(), self.third.clone()]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rat> {
        [&self.first, &self.second, &self.third].into_iter()
    }

    pub fn map(&self, f: impl Fn(&Rat) -> Rat) -> Triple {
        Triple::new(f(&self.first), f(&self.second), f(&self.third))
    }

    pub fn sum(&self) -> Rat {
        &(&self.first + &self.second) + &self.third
    }

    pub fn product(&self) -> Rat {
        &(&self.first * &self.second) * &self.third
    }

    pub fn sum_of_cubes(&self) -> Rat {
        self.iter().map(Rat::cube).sum()
    }

    /// Entries in ascending order.
    pub fn sorted(&self) -> Triple {
        let mut v = self.to_array();
        v.sort();
        Triple::from_array(v)
    }

    /// All six orderings of `(a,b,c)`, in the order
    /// `abc, acb, bac, bca, cab, cba`.
    pub fn permutations(&self) -> [Triple; 6] {
        let (a, b, c) = (&self.first, &self.second, &self.third);
        [
            Triple::new(a.clone(), b.clone(), c.clone()),
            Triple::new(a.clone(), c.clone(), b.clone()),
            Triple::new(b.clone(), a.clone(), c.clone()),
            Triple::new(b.clone(), c.clone(), a.clone()),
            Triple::new(c.clone(), a.clone(), b.clone()),
            Triple::new(c.clone(), b.clone(), a.clone()),
        ]
    }

    pub fn is_permutation_of(&self, other: &Triple) -> bool {
        self.sorted() == other.sorted()
    }

    pub fn is_pairwise_distinct(&self) -> bool {
        self.first != self.second && self.second != self.third && self.first != self.third
    }

    pub fn has_zero(&self) -> bool {
        self.iter().any(Rat::is_zero)
    }

    pub fn all_positive(&self) -> bool {
        self.iter().all(Rat::is_positive)
    }

    /// Largest height among the three entries.
    pub fn height(&self) -> num_bigint::BigInt {
        self.iter().map(Rat::height).max().expect("three entries")
    }

    pub(crate) fn require_distinct(&self) -> Result<()> {
        if self.is_pairwise_distinct() {
            Ok(())
        } else {
            Err(Error::RepeatedEntries(self.clone()))
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.first, self.second, self.third)
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The elementary symmetric invariants `s = a+b+c` and `p = abc`.
pub fn elementary_invariants(t: &Triple) -> (Rat, Rat) {
    (t.sum(), t.product())
}

/// Whether `candidate` has the same sum and product as `reference`.
pub fn verify_sum_product(reference: &Triple, candidate: &Triple) -> bool {
    reference.sum() == candidate.sum() && reference.product() == candidate.product()
}

/// Same check against explicit invariants.
pub fn satisfies_sum_product(candidate: &Triple, s: &Rat, p: &Rat) -> bool {
    &candidate.sum() == s && &candidate.product() == p
}

/// Whether `candidate` has the same sum and the same sum of cubes as `reference`.
pub fn verify_sum_cubes(reference: &Triple, candidate: &Triple) -> bool {
    reference.sum() == candidate.sum() && reference.sum_of_cubes() == candidate.sum_of_cubes()
}
