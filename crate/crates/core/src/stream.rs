//! Deterministic solution streams.
//!
//! In the elliptic cases a stream walks the group generated by the base point
//! `P = rho((a,b,c))` and the 3-torsion point `Q`, visiting `mP + kQ` for
//! `m = 1, -1, 2, -2, ...` and `k = 0, 1, 2` within each `m`, and emits the
//! preimage of every element outside the exceptional set. Distinct group
//! elements have distinct preimages, so no deduplication is needed. When the
//! group is finite (`Z/12`, `Z/9`) the walk ends after one full pass.
//!
//! Genus-zero and zero-product triples stream their closed-form families over
//! rationals ordered by height.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::classify::{
    classify_triple, point_order_bounded, require_condition, PointOrder, Verdict,
};
use crate::correspondence::{exceptional_u, rho_inv, rho_unchecked};
use crate::cubes::{cube_reduce, CubeReduction};
use crate::curve::{build_curve, Curve, CurvePoint};
use crate::error::{Condition, Error, Result};
use crate::families::{genus_zero_constant_solution, genus_zero_solution, product_zero_solution};
use crate::rat::{Rat, RationalsByHeight};
use crate::triple::{satisfies_sum_product, verify_sum_cubes, Triple};

/// Group elements examined before a positive search gives up.
pub const DEFAULT_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Preimage of `m P + k Q`.
    Group {
        m: i64,
        k: u8,
    },
    /// The constant genus-zero solution.
    Constant,
    GenusZero {
        u: Rat,
    },
    ProductZero {
        x: Rat,
    },
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Group { m, k } => write!(f, "{m}P + {k}Q"),
            Source::Constant => f.write_str("constant"),
            Source::GenusZero { u } => write!(f, "u = {u}"),
            Source::ProductZero { x } => write!(f, "x = {x}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionRecord {
    pub triple: Triple,
    pub source: Source,
    pub verified: bool,
}

struct GroupWalk {
    curve: Curve,
    base: CurvePoint,
    q: CurvePoint,
    exceptional_u: Rat,
    m: i64,
    multiple: CurvePoint,
    pending: VecDeque<(i64, u8, CurvePoint)>,
    /// Set for finite groups: walk `m <= order(P)` and skip repeats.
    finite: Option<(i64, HashSet<CurvePoint>)>,
}

impl GroupWalk {
    fn new(system: &Triple, s: &Rat, p: &Rat, finite: bool) -> GroupWalk {
        let curve = build_curve(s, p);
        let base = rho_unchecked(system, s, p);
        let q = CurvePoint::Affine {
            u: exceptional_u(s),
            v: p / 2,
        };
        let finite = if finite {
            match point_order_bounded(&base, &curve).expect("base point lies on the curve") {
                PointOrder::Finite(n) => Some((i64::from(n), HashSet::new())),
                PointOrder::InfiniteOrder => None,
            }
        } else {
            None
        };
        GroupWalk {
            curve,
            base,
            q,
            exceptional_u: exceptional_u(s),
            m: 0,
            multiple: CurvePoint::Infinity,
            pending: VecDeque::new(),
            finite,
        }
    }

    fn is_exceptional(&self, pt: &CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { u, .. } => u == &self.exceptional_u,
        }
    }

    fn refill(&mut self) -> bool {
        if let Some((order, _)) = &self.finite {
            if self.m >= *order {
                return false;
            }
        }
        self.m += 1;
        self.multiple = self.curve.add_unchecked(&self.multiple, &self.base);
        let m = self.m;
        for (signed_m, start) in [(m, self.multiple.clone()), (-m, -&self.multiple)] {
            let mut g = start;
            for k in 0..3u8 {
                let next = self.curve.add_unchecked(&g, &self.q);
                self.pending.push_back((signed_m, k, g));
                g = next;
            }
        }
        true
    }

    /// Next group element, with the exceptional flag; `None` once a finite
    /// group is exhausted.
    fn next_element(&mut self) -> Option<(i64, u8, CurvePoint, bool)> {
        loop {
            if self.pending.is_empty() && !self.refill() {
                return None;
            }
            let (m, k, pt) = self.pending.pop_front()?;
            if let Some((_, seen)) = &mut self.finite {
                if !seen.insert(pt.clone()) {
                    continue;
                }
            }
            let exceptional = self.is_exceptional(&pt);
            return Some((m, k, pt, exceptional));
        }
    }
}

enum Walk {
    Group(Box<GroupWalk>),
    GenusZero {
        scale: Rat,
        t: Rat,
        constant_done: bool,
        params: RationalsByHeight,
    },
    ProductZero {
        params: RationalsByHeight,
    },
}

/// A lazily evaluated, deterministic stream of verified solutions.
///
/// Iterates forever unless the underlying group is finite or a budget is set.
pub struct SolutionStream {
    reference: Triple,
    system_s: Rat,
    system_p: Rat,
    reduction: Option<CubeReduction>,
    walk: Walk,
    skip_trivial: bool,
    budget: Option<usize>,
    examined: usize,
    budget_hit: bool,
}

impl SolutionStream {
    fn for_system(
        reference: Triple,
        system: &Triple,
        reduction: Option<CubeReduction>,
    ) -> Result<SolutionStream> {
        system.require_distinct()?;
        let (s, p) = (system.sum(), system.product());
        let walk = match classify_triple(system).verdict {
            Verdict::NotPairwiseDistinct => return Err(Error::RepeatedEntries(system.clone())),
            Verdict::ProductZero => Walk::ProductZero {
                params: RationalsByHeight::new(),
            },
            Verdict::GenusZero { scale, t } => Walk::GenusZero {
                scale,
                t,
                constant_done: false,
                params: RationalsByHeight::new(),
            },
            Verdict::Elliptic(torsion) => {
                let finite = torsion != crate::classify::Torsion::ZxZ3;
                Walk::Group(Box::new(GroupWalk::new(system, &s, &p, finite)))
            }
        };
        Ok(SolutionStream {
            reference,
            system_s: s,
            system_p: p,
            reduction,
            walk,
            skip_trivial: false,
            budget: None,
            examined: 0,
            budget_hit: false,
        })
    }

    /// Skip the permutations of the reference triple itself.
    pub fn nontrivial(mut self) -> Self {
        self.skip_trivial = true;
        self
    }

    /// Stop after examining `budget` candidates (group elements or parameter
    /// values).
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = Some(budget);
        self
    }

    /// Candidates examined so far, including skipped ones.
    pub fn examined(&self) -> usize {
        self.examined
    }

    /// Whether iteration stopped because the budget ran out.
    pub fn budget_exhausted(&self) -> bool {
        self.budget_hit
    }

    pub fn reference(&self) -> &Triple {
        &self.reference
    }

    /// Next candidate on the sum-product system, before lifting and filtering.
    fn next_candidate(&mut self) -> Option<Option<(Triple, Source)>> {
        if let Some(budget) = self.budget {
            if self.examined >= budget {
                self.budget_hit = true;
                return None;
            }
        }
        let candidate = match &mut self.walk {
            Walk::Group(walk) => {
                let (m, k, pt, exceptional) = walk.next_element()?;
                if exceptional {
                    None
                } else {
                    let t = rho_inv(&pt, &self.system_s, &self.system_p)
                        .expect("non-exceptional point has a preimage");
                    Some((t, Source::Group { m, k }))
                }
            }
            Walk::GenusZero {
                scale,
                t,
                constant_done,
                params,
            } => {
                if !*constant_done {
                    *constant_done = true;
                    let c = genus_zero_constant_solution(scale, t).expect("valid parameters");
                    Some((c, Source::Constant))
                } else {
                    let u = params.next()?;
                    // u = -1 and u = -t are poles
                    genus_zero_solution(scale, t, &u)
                        .ok()
                        .map(|sol| (sol, Source::GenusZero { u }))
                }
            }
            Walk::ProductZero { params } => {
                let x = params.next()?;
                let sol = product_zero_solution(&self.system_s, &x);
                Some((sol, Source::ProductZero { x }))
            }
        };
        self.examined += 1;
        Some(candidate)
    }
}

impl Iterator for SolutionStream {
    type Item = SolutionRecord;

    fn next(&mut self) -> Option<SolutionRecord> {
        loop {
            let Some((system_solution, source)) = self.next_candidate()? else {
                continue;
            };
            assert!(
                satisfies_sum_product(&system_solution, &self.system_s, &self.system_p),
                "walk produced a non-solution {system_solution}"
            );
            let (triple, verified) = match &self.reduction {
                None => (system_solution, true),
                Some(red) => {
                    let lifted = red.lift(&system_solution);
                    let ok = verify_sum_cubes(&self.reference, &lifted);
                    (lifted, ok)
                }
            };
            assert!(verified, "lifted triple {triple} fails the cube-sum check");
            if self.skip_trivial && triple.is_permutation_of(&self.reference) {
                continue;
            }
            return Some(SolutionRecord {
                triple,
                source,
                verified,
            });
        }
    }
}

/// All solutions of `x+y+z = a+b+c`, `xyz = abc` reachable by the walk,
/// starting with the permutations of `t` in the elliptic cases.
pub fn solution_stream(t: &Triple) -> Result<SolutionStream> {
    SolutionStream::for_system(t.clone(), t, None)
}

/// Solutions of `x+y+z = a+b+c`, `x^3+y^3+z^3 = a^3+b^3+c^3`, obtained by
/// lifting the sum-product stream of `psi(t)`.
pub fn cube_stream(t: &Triple) -> Result<SolutionStream> {
    t.require_distinct()?;
    require_condition(t, Condition::Third)?;
    require_condition(t, Condition::Fourth)?;
    let reduction = cube_reduce(t);
    let reduced = reduction.reduced.clone();
    SolutionStream::for_system(t.clone(), &reduced, Some(reduction))
}

/// All-positive nontrivial records, bounded by a candidate cap.
///
/// Yields `Err(CapExhausted)` once if the cap runs out before `count` records
/// were found.
pub struct PositiveStream {
    inner: SolutionStream,
    count: usize,
    emitted: usize,
    done: bool,
}

impl PositiveStream {
    fn new(inner: SolutionStream, count: usize, cap: usize) -> PositiveStream {
        PositiveStream {
            inner: inner.nontrivial().with_budget(cap),
            count,
            emitted: 0,
            done: false,
        }
    }

    pub fn examined(&self) -> usize {
        self.inner.examined()
    }
}

impl Iterator for PositiveStream {
    type Item = Result<SolutionRecord>;

    fn next(&mut self) -> Option<Result<SolutionRecord>> {
        if self.done || self.emitted >= self.count {
            return None;
        }
        for rec in self.inner.by_ref() {
            if rec.triple.all_positive() {
                self.emitted += 1;
                return Some(Ok(rec));
            }
        }
        self.done = true;
        if self.inner.budget_exhausted() {
            Some(Err(Error::CapExhausted {
                emitted: self.emitted,
                examined: self.inner.examined(),
            }))
        } else {
            None
        }
    }
}

fn require_positive(t: &Triple) -> Result<()> {
    t.require_distinct()?;
    if t.all_positive() {
        Ok(())
    } else {
        Err(Error::NotPositive(t.clone()))
    }
}

/// Positive solutions of the sum-product system; needs positive distinct
/// entries satisfying `A(B-C)^3 != B(C-A)^3` for every permutation.
pub fn positive_stream(t: &Triple, count: usize, cap: usize) -> Result<PositiveStream> {
    require_positive(t)?;
    require_condition(t, Condition::First)?;
    Ok(PositiveStream::new(solution_stream(t)?, count, cap))
}

/// Positive solutions of the cube-sum system; needs positive distinct
/// entries satisfying `(A+B)(A-B)^3 != (B+C)(B-C)^3` for every permutation.
pub fn positive_cube_stream(t: &Triple, count: usize, cap: usize) -> Result<PositiveStream> {
    require_positive(t)?;
    require_condition(t, Condition::Third)?;
    let reduction = cube_reduce(t);
    let reduced = reduction.reduced.clone();
    let inner = SolutionStream::for_system(t.clone(), &reduced, Some(reduction))?;
    Ok(PositiveStream::new(inner, count, cap))
}
