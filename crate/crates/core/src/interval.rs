//! Canonical finite unions of rational intervals.
//!
//! An [`IntervalUnion`] is the measure-theoretic equivalence class of a
//! finite union of bounded intervals: components are kept half-open
//! `[lo, hi)`, strictly sorted, with overlapping or adjacent inputs merged.
//! Null boundaries are normalized away, so two unions are equal as sets up
//! to null sets exactly when their canonical forms are identical.
//!
//! All operations are pure and exact; values are immutable after
//! construction.

use crate::error::{Error, Result};
use crate::rational::{floor_int, rint, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A nondegenerate bounded interval, `lo < hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo < hi {
            Ok(Interval { lo, hi })
        } else {
            Err(Error::InvalidEndpoints { lo, hi })
        }
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rint(2)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.lo, self.hi)
    }
}

/// Boolean operation selector for [`IntervalUnion::combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersect,
    Difference,
    SymmetricDifference,
}

/// Canonical finite disjoint union of rational intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalUnion {
    components: Vec<Interval>,
}

impl IntervalUnion {
    /// The empty set.
    pub fn empty() -> Self {
        IntervalUnion { components: Vec::new() }
    }

    /// A single interval `[lo, hi)`; empty when `lo == hi`.
    pub fn interval(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidEndpoints { lo, hi });
        }
        if lo == hi {
            return Ok(Self::empty());
        }
        Ok(IntervalUnion { components: vec![Interval { lo, hi }] })
    }

    /// The centered interval `(-len/2, len/2)`; empty for `len <= 0`.
    pub fn centered(len: &Rational) -> Self {
        if len.is_positive() {
            let half = len / rint(2);
            IntervalUnion { components: vec![Interval { lo: -half.clone(), hi: half }] }
        } else {
            Self::empty()
        }
    }

    /// Canonicalizes raw endpoint pairs: degenerate pairs are dropped,
    /// overlapping or adjacent intervals merged. Errors on a pair with
    /// `lo > hi`.
    pub fn normalize(raw: Vec<(Rational, Rational)>) -> Result<Self> {
        let mut pairs = Vec::with_capacity(raw.len());
        for (lo, hi) in raw {
            if lo > hi {
                return Err(Error::InvalidEndpoints { lo, hi });
            }
            if lo < hi {
                pairs.push((lo, hi));
            }
        }
        pairs.sort();
        let mut components: Vec<Interval> = Vec::with_capacity(pairs.len());
        for (lo, hi) in pairs {
            match components.last_mut() {
                Some(last) if lo <= last.hi => {
                    if hi > last.hi {
                        last.hi = hi;
                    }
                }
                _ => components.push(Interval { lo, hi }),
            }
        }
        Ok(IntervalUnion { components })
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    /// Total Lebesgue measure.
    pub fn measure(&self) -> Rational {
        let mut total = Rational::zero();
        for c in &self.components {
            total += c.length();
        }
        total
    }

    /// Smallest closed interval containing the set, `None` when empty.
    pub fn hull(&self) -> Option<Interval> {
        match (self.components.first(), self.components.last()) {
            (Some(first), Some(last)) => Some(Interval {
                lo: first.lo.clone(),
                hi: last.hi.clone(),
            }),
            _ => None,
        }
    }

    /// `sup - inf` of the closure representative.
    pub fn diameter(&self) -> Result<Rational> {
        self.hull()
            .map(|h| h.length())
            .ok_or(Error::EmptySet("diameter argument"))
    }

    /// Membership of a point, with the canonical half-open components.
    pub fn contains(&self, x: &Rational) -> bool {
        let idx = self.components.partition_point(|c| c.hi <= *x);
        idx < self.components.len() && self.components[idx].lo <= *x
    }

    /// Boolean combination of two unions.
    ///
    /// Satisfies `|U △ V| = |U| + |V| - 2|U ∩ V|` exactly.
    pub fn combine(&self, other: &IntervalUnion, op: SetOp) -> IntervalUnion {
        // Sweep the elementary segments cut out by every endpoint of both
        // operands; each segment is either fully in or fully out of the
        // result, decided at its midpoint.
        let mut cuts: Vec<Rational> = Vec::with_capacity(2 * (self.components.len() + other.components.len()));
        for c in self.components.iter().chain(other.components.iter()) {
            cuts.push(c.lo.clone());
            cuts.push(c.hi.clone());
        }
        cuts.sort();
        cuts.dedup();

        let keep = |in_u: bool, in_v: bool| match op {
            SetOp::Union => in_u || in_v,
            SetOp::Intersect => in_u && in_v,
            SetOp::Difference => in_u && !in_v,
            SetOp::SymmetricDifference => in_u != in_v,
        };

        let mut out: Vec<Interval> = Vec::new();
        for w in cuts.windows(2) {
            let mid = (&w[0] + &w[1]) / rint(2);
            if keep(self.contains(&mid), other.contains(&mid)) {
                match out.last_mut() {
                    Some(last) if last.hi == w[0] => last.hi = w[1].clone(),
                    _ => out.push(Interval { lo: w[0].clone(), hi: w[1].clone() }),
                }
            }
        }
        IntervalUnion { components: out }
    }

    pub fn union(&self, other: &IntervalUnion) -> IntervalUnion {
        self.combine(other, SetOp::Union)
    }

    pub fn intersect(&self, other: &IntervalUnion) -> IntervalUnion {
        self.combine(other, SetOp::Intersect)
    }

    pub fn difference(&self, other: &IntervalUnion) -> IntervalUnion {
        self.combine(other, SetOp::Difference)
    }

    pub fn symmetric_difference(&self, other: &IntervalUnion) -> IntervalUnion {
        self.combine(other, SetOp::SymmetricDifference)
    }

    /// Image under `x -> r*x + s`, `r != 0`. Measure scales by `|r|`.
    pub fn affine_image(&self, r: &Rational, s: &Rational) -> Result<IntervalUnion> {
        if r.is_zero() {
            return Err(Error::ZeroScale);
        }
        let mut components: Vec<Interval> = self
            .components
            .iter()
            .map(|c| {
                let a = r * &c.lo + s;
                let b = r * &c.hi + s;
                if r.is_positive() {
                    Interval { lo: a, hi: b }
                } else {
                    Interval { lo: b, hi: a }
                }
            })
            .collect();
        if r.is_negative() {
            components.reverse();
        }
        Ok(IntervalUnion { components })
    }

    /// `{-x : x in U}`.
    pub fn reflect(&self) -> IntervalUnion {
        self.affine_image(&rint(-1), &Rational::zero())
            .expect("scale -1 is nonzero")
    }

    /// `U + s`.
    pub fn translate(&self, s: &Rational) -> IntervalUnion {
        self.affine_image(&Rational::one(), s)
            .expect("scale 1 is nonzero")
    }

    /// Minkowski sum of the closure representatives: endpoints add.
    /// Both operands must be nonempty.
    pub fn minkowski_sum(&self, other: &IntervalUnion) -> Result<IntervalUnion> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptySet("minkowski_sum operand"));
        }
        let mut raw = Vec::with_capacity(self.components.len() * other.components.len());
        for a in &self.components {
            for b in &other.components {
                raw.push((&a.lo + &b.lo, &a.hi + &b.hi));
            }
        }
        IntervalUnion::normalize(raw)
    }

    /// Difference set `U - V = U + (-V)`.
    pub fn minkowski_difference_set(&self, other: &IntervalUnion) -> Result<IntervalUnion> {
        self.minkowski_sum(&other.reflect())
    }

    /// Symmetric nonincreasing rearrangement: the centered interval of the
    /// same measure. Idempotent and measure-preserving.
    pub fn rearrange(&self) -> IntervalUnion {
        IntervalUnion::centered(&self.measure())
    }

    /// Removes measure `left` from the left end and `right` from the right
    /// end, cutting at the extreme exact solutions of the cumulative-measure
    /// equations.
    ///
    /// Cut points: `a` is the smallest number with `|S ∩ (-inf, a)| = left`
    /// and `b` the largest with `|S ∩ (b, inf)| = right`; the result is
    /// `S ∩ [a, b]`. When cumulative measure is flat across a gap of `S`,
    /// the extreme solution is taken, which lands the cut on the gap's
    /// inner boundary.
    pub fn truncate(&self, left: &Rational, right: &Rational) -> Result<IntervalUnion> {
        let measure = self.measure();
        if left.is_negative() || right.is_negative() || left + right >= measure {
            return Err(Error::BadTruncation {
                left: left.clone(),
                right: right.clone(),
                measure,
            });
        }

        let a = if left.is_zero() {
            None
        } else {
            let mut remaining = left.clone();
            let mut cut = None;
            for c in &self.components {
                let len = c.length();
                if remaining <= len {
                    cut = Some(&c.lo + remaining);
                    break;
                }
                remaining -= len;
            }
            // left < measure guarantees the scan terminates inside a
            // component; `remaining == len` lands on the component's right
            // endpoint, the smallest solution across the following gap.
            Some(cut.expect("left truncation below total measure"))
        };

        let b = if right.is_zero() {
            None
        } else {
            let mut remaining = right.clone();
            let mut cut = None;
            for c in self.components.iter().rev() {
                let len = c.length();
                if remaining <= len {
                    cut = Some(&c.hi - remaining);
                    break;
                }
                remaining -= len;
            }
            Some(cut.expect("right truncation below total measure"))
        };

        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let lo = match &a {
                Some(a) if *a > c.lo => a.clone(),
                _ => c.lo.clone(),
            };
            let hi = match &b {
                Some(b) if *b < c.hi => b.clone(),
                _ => c.hi.clone(),
            };
            if lo < hi {
                out.push((lo, hi));
            }
        }
        IntervalUnion::normalize(out)
    }

    /// Image under the quotient map to the unit circle, as a canonical
    /// union inside `[0, 1)`.
    pub fn torus_project(&self) -> IntervalUnion {
        let one = Rational::one();
        let mut raw: Vec<(Rational, Rational)> = Vec::new();
        for c in &self.components {
            if c.length() >= one {
                return IntervalUnion::interval(Rational::zero(), one)
                    .expect("unit interval is valid");
            }
            let shift = Rational::from_integer(floor_int(&c.lo));
            let lo = &c.lo - &shift;
            let hi = &c.hi - &shift;
            if hi <= one {
                raw.push((lo, hi));
            } else {
                raw.push((lo, one.clone()));
                raw.push((Rational::zero(), hi - &one));
            }
        }
        IntervalUnion::normalize(raw).expect("projected pairs are ordered")
    }
}

impl fmt::Display for IntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Convenience constructor from integer endpoint pairs, used heavily in
/// tests and examples.
pub fn union_of(pairs: &[(i64, i64)]) -> IntervalUnion {
    let raw = pairs
        .iter()
        .map(|(a, b)| (rint(*a), rint(*b)))
        .collect();
    IntervalUnion::normalize(raw).expect("integer pairs are ordered")
}

/// Largest denominator appearing among component endpoints (1 for the
/// empty set). Useful for documenting generator output.
pub fn max_denominator(u: &IntervalUnion) -> BigInt {
    let mut d = BigInt::one();
    for c in u.components() {
        if c.lo.denom() > &d {
            d = c.lo.denom().clone();
        }
        if c.hi.denom() > &d {
            d = c.hi.denom().clone();
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn q(s: &str) -> Rational {
        crate::rational::parse_rational(s).unwrap()
    }

    fn iu(pairs: &[(&str, &str)]) -> IntervalUnion {
        IntervalUnion::normalize(pairs.iter().map(|(a, b)| (q(a), q(b))).collect()).unwrap()
    }

    #[test]
    fn normalize_empty_and_merges() {
        assert!(IntervalUnion::normalize(vec![]).unwrap().is_empty());
        assert_eq!(iu(&[("0", "2"), ("1", "3")]), iu(&[("0", "3")]));
        // adjacency across a null boundary merges
        assert_eq!(iu(&[("0", "1"), ("1", "2")]), iu(&[("0", "2")]));
        // degenerate pairs dropped
        assert_eq!(iu(&[("0", "0"), ("1", "2")]), iu(&[("1", "2")]));
        assert!(matches!(
            IntervalUnion::normalize(vec![(q("1"), q("0"))]),
            Err(Error::InvalidEndpoints { .. })
        ));
    }

    #[test]
    fn measure_sums_lengths() {
        assert_eq!(IntervalUnion::empty().measure(), rat(0, 1));
        assert_eq!(iu(&[("0", "1"), ("2", "5")]).measure(), rat(4, 1));
        assert_eq!(iu(&[("0", "2"), ("1", "3")]).measure(), rat(3, 1));
    }

    #[test]
    fn combine_examples() {
        let u = iu(&[("0", "1")]);
        assert!(u.symmetric_difference(&u).is_empty());
        assert_eq!(
            iu(&[("0", "2")]).intersect(&iu(&[("1", "3")])),
            iu(&[("1", "2")])
        );
        let d = iu(&[("0", "1"), ("2", "3")]).symmetric_difference(&iu(&[("0", "3")]));
        assert_eq!(d, iu(&[("1", "2")]));
        assert_eq!(d.measure(), rat(1, 1));
    }

    #[test]
    fn symdiff_measure_identity() {
        let u = iu(&[("0", "2"), ("3", "5")]);
        let v = iu(&[("1", "4"), ("9/2", "6")]);
        let lhs = u.symmetric_difference(&v).measure();
        let rhs = u.measure() + v.measure() - rat(2, 1) * u.intersect(&v).measure();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn affine_examples() {
        assert_eq!(
            iu(&[("0", "1")]).affine_image(&rat(1, 1), &rat(5, 1)).unwrap(),
            iu(&[("5", "6")])
        );
        assert_eq!(
            iu(&[("0", "1"), ("2", "3")]).reflect(),
            iu(&[("-3", "-2"), ("-1", "0")])
        );
        let dilated = iu(&[("0", "2")]).affine_image(&rat(1, 2), &rat(0, 1)).unwrap();
        assert_eq!(dilated, iu(&[("0", "1")]));
        assert_eq!(dilated.measure(), rat(1, 1));
        assert!(matches!(
            iu(&[("0", "1")]).affine_image(&rat(0, 1), &rat(0, 1)),
            Err(Error::ZeroScale)
        ));
    }

    #[test]
    fn minkowski_examples() {
        let sum = iu(&[("0", "1")]).minkowski_sum(&iu(&[("0", "1")])).unwrap();
        assert_eq!(sum, iu(&[("0", "2")]));
        assert_eq!(
            iu(&[("0", "1"), ("2", "3")]).minkowski_sum(&iu(&[("0", "2")])).unwrap(),
            iu(&[("0", "5")])
        );
        assert_eq!(
            iu(&[("0", "1"), ("10", "11")]).minkowski_sum(&iu(&[("0", "1")])).unwrap(),
            iu(&[("0", "2"), ("10", "12")])
        );
        assert!(iu(&[("0", "1")]).minkowski_sum(&IntervalUnion::empty()).is_err());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(iu(&[("0", "1")]).diameter().unwrap(), rat(1, 1));
        let u = iu(&[("0", "1"), ("9", "10")]);
        assert_eq!(u.diameter().unwrap(), rat(10, 1));
        assert_eq!(u.reflect().diameter().unwrap(), rat(10, 1));
        assert!(IntervalUnion::empty().diameter().is_err());
    }

    #[test]
    fn rearrange_examples() {
        assert_eq!(
            iu(&[("0", "1"), ("2", "5")]).rearrange(),
            iu(&[("-2", "2")])
        );
        assert!(IntervalUnion::empty().rearrange().is_empty());
        let fixed = iu(&[("-3", "3")]);
        assert_eq!(fixed.rearrange(), fixed);
        // idempotent
        assert_eq!(fixed.rearrange().rearrange(), fixed.rearrange());
    }

    #[test]
    fn truncate_examples() {
        let s = iu(&[("0", "3")]);
        assert_eq!(s.truncate(&rat(1, 1), &rat(1, 1)).unwrap(), iu(&[("1", "2")]));
        assert_eq!(s.truncate(&rat(0, 1), &rat(0, 1)).unwrap(), s);
        let t = iu(&[("0", "1"), ("2", "3")]);
        assert_eq!(
            t.truncate(&rat(1, 2), &rat(1, 2)).unwrap(),
            iu(&[("1/2", "1"), ("2", "5/2")])
        );
        assert!(t.truncate(&rat(1, 1), &rat(1, 1)).is_err());
        assert!(t.truncate(&rat(-1, 2), &rat(0, 1)).is_err());
    }

    #[test]
    fn truncate_cuts_on_gap_boundary() {
        // Removing exactly the first component's measure puts the cut at the
        // smallest solution, the component's right endpoint.
        let t = iu(&[("0", "1"), ("2", "3")]);
        let cut = t.truncate(&rat(1, 1), &rat(0, 1)).unwrap();
        assert_eq!(cut, iu(&[("2", "3")]));
        let cut = t.truncate(&rat(0, 1), &rat(1, 1)).unwrap();
        assert_eq!(cut, iu(&[("0", "1")]));
    }

    #[test]
    fn truncate_measure_and_subset() {
        let s = iu(&[("0", "2"), ("5/2", "3"), ("4", "6")]);
        let t = s.truncate(&rat(3, 4), &rat(5, 4)).unwrap();
        assert_eq!(t.measure(), s.measure() - rat(2, 1));
        assert!(t.difference(&s).is_empty());
    }

    #[test]
    fn torus_examples() {
        assert_eq!(iu(&[("0", "3/10")]).torus_project(), iu(&[("0", "3/10")]));
        assert_eq!(
            iu(&[("9/10", "12/10")]).torus_project(),
            iu(&[("0", "2/10"), ("9/10", "1")])
        );
        let full = iu(&[("0", "2")]).torus_project();
        assert_eq!(full, iu(&[("0", "1")]));
        assert_eq!(full.measure(), rat(1, 1));
        // negative coordinates wrap
        assert_eq!(iu(&[("-1/4", "1/4")]).torus_project(), iu(&[("0", "1/4"), ("3/4", "1")]));
    }

    #[test]
    fn contains_respects_half_open_form() {
        let u = iu(&[("0", "1"), ("2", "3")]);
        assert!(u.contains(&rat(0, 1)));
        assert!(!u.contains(&rat(1, 1)));
        assert!(u.contains(&rat(5, 2)));
        assert!(!u.contains(&rat(7, 2)));
    }
}
