//! Exact piecewise-linear convolutions of indicator functions.
//!
//! `1_A * 1_B` for interval unions `A`, `B` is a continuous, compactly
//! supported, piecewise-affine function with rational knots. This module
//! builds that function exactly, integrates it against sets, extracts
//! superlevel sets, and inverts the level-measure map.

use crate::error::{Error, Result};
use crate::interval::IntervalUnion;
use crate::rational::{rint, rmax, rmin, Rational};
use num_traits::{Signed, Zero};

/// A continuous compactly supported piecewise-affine function.
///
/// The function interpolates `(knots[i], values[i])` affinely and is
/// identically zero outside `[knots[0], knots[last]]`; the first and last
/// values are zero and all values are nonnegative. The zero function is the
/// empty knot list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PiecewiseLinear {
    knots: Vec<Rational>,
    values: Vec<Rational>,
}

impl PiecewiseLinear {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.knots.is_empty()
    }

    pub fn knots(&self) -> &[Rational] {
        &self.knots
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Hull of the support, `None` for the zero function.
    pub fn support_hull(&self) -> Option<(Rational, Rational)> {
        match (self.knots.first(), self.knots.last()) {
            (Some(a), Some(b)) => Some((a.clone(), b.clone())),
            _ => None,
        }
    }

    /// Exact value at `x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        if self.knots.is_empty() {
            return Rational::zero();
        }
        if *x <= self.knots[0] || *x >= *self.knots.last().unwrap() {
            // endpoint values are zero by invariant
            return Rational::zero();
        }
        let idx = self.knots.partition_point(|k| k <= x);
        let (x0, v0) = (&self.knots[idx - 1], &self.values[idx - 1]);
        let (x1, v1) = (&self.knots[idx], &self.values[idx]);
        v0 + (v1 - v0) * (x - x0) / (x1 - x0)
    }

    /// Maximum value attained.
    pub fn sup(&self) -> Rational {
        self.values
            .iter()
            .cloned()
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// `∫ f` over the whole line.
    pub fn total_integral(&self) -> Rational {
        let mut total = Rational::zero();
        for i in 1..self.knots.len() {
            total += (&self.values[i - 1] + &self.values[i])
                * (&self.knots[i] - &self.knots[i - 1])
                / rint(2);
        }
        total
    }

    /// `∫ max(f - level, 0)`: the mass above a horizontal cut. Exact per
    /// segment; crossing segments contribute the triangle above the cut.
    pub fn integral_above_level(&self, level: &Rational) -> Rational {
        assert!(!level.is_negative(), "level must be nonnegative");
        let mut total = Rational::zero();
        for i in 1..self.knots.len() {
            let (x0, x1) = (&self.knots[i - 1], &self.knots[i]);
            let (v0, v1) = (&self.values[i - 1], &self.values[i]);
            let e0 = v0 - level;
            let e1 = v1 - level;
            let width = x1 - x0;
            if !e0.is_positive() && !e1.is_positive() {
                continue;
            }
            if !e0.is_negative() && !e1.is_negative() {
                total += (&e0 + &e1) * &width / rint(2);
            } else {
                // one strictly positive, one strictly negative endpoint
                let (pos, neg) = if e0.is_positive() { (&e0, &e1) } else { (&e1, &e0) };
                // the positive part occupies width * pos / (pos - neg)
                total += pos * pos * &width / ((pos - neg) * rint(2));
            }
        }
        total
    }

    /// `{x : f(x) > t}` as a canonical union; strict inequality, so
    /// plateaus at exactly level `t` contribute nothing.
    pub fn superlevel(&self, t: &Rational) -> IntervalUnion {
        assert!(!t.is_negative(), "superlevel threshold must be nonnegative");
        let mut raw: Vec<(Rational, Rational)> = Vec::new();
        for i in 1..self.knots.len() {
            let (x0, x1) = (&self.knots[i - 1], &self.knots[i]);
            let (v0, v1) = (&self.values[i - 1], &self.values[i]);
            let above0 = v0 > t;
            let above1 = v1 > t;
            match (above0, above1) {
                (true, true) => raw.push((x0.clone(), x1.clone())),
                (true, false) => {
                    let cross = x0 + (x1 - x0) * (v0 - t) / (v0 - v1);
                    raw.push((x0.clone(), cross));
                }
                (false, true) => {
                    let cross = x1 - (x1 - x0) * (v1 - t) / (v1 - v0);
                    raw.push((cross, x1.clone()));
                }
                (false, false) => {}
            }
        }
        IntervalUnion::normalize(raw).expect("superlevel pieces are ordered")
    }

    /// Total width of the plateau `{f == v}` (zero unless some segment is
    /// constant at `v`).
    fn plateau_width(&self, v: &Rational) -> Rational {
        let mut width = Rational::zero();
        for i in 1..self.knots.len() {
            if self.values[i - 1] == *v && self.values[i] == *v {
                width += &self.knots[i] - &self.knots[i - 1];
            }
        }
        width
    }
}

/// Builds the exact convolution `1_A * 1_B`.
///
/// Each component pair `[a,b) + [c,d)` contributes a trapezoid whose slope
/// is `+1` on `[a+c, min(a+d, b+c)]` and `-1` on `[max(a+d, b+c), b+d]`;
/// accumulating the slope deltas at the merged breakpoints and integrating
/// once yields the exact sum in `O(pairs log pairs)` rational operations.
/// The result is reduced to canonical form (no collinear interior knots,
/// support trimmed). Empty operands give the zero function.
pub fn convolve_indicators(a: &IntervalUnion, b: &IntervalUnion) -> PiecewiseLinear {
    if a.is_empty() || b.is_empty() {
        return PiecewiseLinear::zero();
    }

    let mut deltas: std::collections::BTreeMap<Rational, i64> = std::collections::BTreeMap::new();
    let mut bump = |x: Rational, d: i64| {
        *deltas.entry(x).or_insert(0) += d;
    };
    for ca in a.components() {
        for cb in b.components() {
            let rise_from = &ca.lo + &cb.lo;
            let m1 = &ca.lo + &cb.hi;
            let m2 = &ca.hi + &cb.lo;
            let fall_to = &ca.hi + &cb.hi;
            let (plateau_from, plateau_to) = if m1 <= m2 { (m1, m2) } else { (m2, m1) };
            bump(rise_from, 1);
            bump(plateau_from, -1);
            bump(plateau_to, -1);
            bump(fall_to, 1);
        }
    }

    let mut knots: Vec<Rational> = Vec::with_capacity(deltas.len());
    let mut values: Vec<Rational> = Vec::with_capacity(deltas.len());
    let mut slope: i64 = 0;
    let mut value = Rational::zero();
    let mut prev: Option<Rational> = None;
    for (x, d) in deltas {
        if let Some(p) = prev {
            value += Rational::from_integer(slope.into()) * (&x - &p);
        }
        slope += d;
        knots.push(x.clone());
        values.push(value.clone());
        prev = Some(x);
    }

    canonical(knots, values)
}

fn canonical(mut knots: Vec<Rational>, mut values: Vec<Rational>) -> PiecewiseLinear {
    // trim flat zero tails down to a single zero endpoint on each side
    while knots.len() >= 2 && values[0].is_zero() && values[1].is_zero() {
        knots.remove(0);
        values.remove(0);
    }
    while knots.len() >= 2
        && values[knots.len() - 1].is_zero()
        && values[knots.len() - 2].is_zero()
    {
        knots.pop();
        values.pop();
    }
    if knots.len() < 2 {
        return PiecewiseLinear::zero();
    }

    // drop interior knots where the two incident segments are collinear
    let mut out_k: Vec<Rational> = Vec::with_capacity(knots.len());
    let mut out_v: Vec<Rational> = Vec::with_capacity(values.len());
    for i in 0..knots.len() {
        if i > 0 && i + 1 < knots.len() {
            let left = (&values[i] - &out_v[out_k.len() - 1]) * (&knots[i + 1] - &knots[i]);
            let right = (&values[i + 1] - &values[i]) * (&knots[i] - &out_k[out_k.len() - 1]);
            if left == right {
                continue;
            }
        }
        out_k.push(knots[i].clone());
        out_v.push(values[i].clone());
    }
    PiecewiseLinear { knots: out_k, values: out_v }
}

/// Exact `∫_C f`, via closed-form integration of each affine piece over
/// each component of `C`.
pub fn pairing(f: &PiecewiseLinear, c: &IntervalUnion) -> Rational {
    let mut total = Rational::zero();
    let Some((supp_lo, supp_hi)) = f.support_hull() else {
        return total;
    };
    for comp in c.components() {
        let lo = rmax(&comp.lo, &supp_lo);
        let hi = rmin(&comp.hi, &supp_hi);
        if lo >= hi {
            continue;
        }
        // breakpoints: clip endpoints plus every knot strictly inside
        let mut prev_x = lo.clone();
        let mut prev_v = f.eval(&lo);
        let start = f.knots().partition_point(|k| k <= &lo);
        for idx in start..f.knots().len() {
            let k = &f.knots()[idx];
            if *k >= hi {
                break;
            }
            let v = &f.values()[idx];
            total += (&prev_v + v) * (k - &prev_x) / rint(2);
            prev_x = k.clone();
            prev_v = v.clone();
        }
        let end_v = f.eval(&hi);
        total += (&prev_v + &end_v) * (&hi - &prev_x) / rint(2);
    }
    total
}

/// Superlevel set `S_{A,B}(t) = {x : (1_A * 1_B)(x) > t}`.
pub fn superlevel(a: &IntervalUnion, b: &IntervalUnion, t: &Rational) -> IntervalUnion {
    convolve_indicators(a, b).superlevel(t)
}

/// Exact `∫_tau^inf |S_{A,B}(t)| dt`, computed from the layer-cake
/// identity: the integral equals `∫_{S(tau)} f - tau * |S(tau)|`.
pub fn tail_integral(a: &IntervalUnion, b: &IntervalUnion, tau: &Rational) -> Rational {
    assert!(!tau.is_negative(), "tau must be nonnegative");
    let f = convolve_indicators(a, b);
    tail_integral_of(&f, tau)
}

/// Layer-cake tail of an already-built convolution.
pub fn tail_integral_of(f: &PiecewiseLinear, tau: &Rational) -> Rational {
    let s = f.superlevel(tau);
    pairing(f, &s) - tau * s.measure()
}

/// Result of inverting the nonincreasing map `t -> |S_{A,B}(t)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelQuery {
    /// The target measure is attained exactly at this level.
    Exact(Rational),
    /// The target falls inside a downward jump at `level` (a plateau of the
    /// convolution): `at_level = |S(level)| < target <= before = |S(level-)|`.
    Jump {
        level: Rational,
        at_level: Rational,
        before: Rational,
    },
}

/// Finds `tau` with `|S_{A,B}(tau)| = m`, or reports the bracketing jump.
///
/// The level-measure map is strictly decreasing and piecewise linear on
/// `[0, sup f]` with downward jumps exactly at plateau values, so either an
/// exact rational solution exists or `m` falls in a jump.
pub fn level_for_measure(
    a: &IntervalUnion,
    b: &IntervalUnion,
    m: &Rational,
) -> Result<LevelQuery> {
    let f = convolve_indicators(a, b);
    let support_measure = f.superlevel(&Rational::zero()).measure();
    if m.is_negative() || *m > support_measure {
        return Err(Error::MeasureOutOfRange {
            target: m.clone(),
            max: support_measure,
        });
    }

    let mut levels: Vec<Rational> = f.values().to_vec();
    levels.push(Rational::zero());
    levels.sort();
    levels.dedup();

    let measures: Vec<Rational> = levels
        .iter()
        .map(|t| f.superlevel(t).measure())
        .collect();

    for (t, mu) in levels.iter().zip(measures.iter()) {
        if mu == m {
            return Ok(LevelQuery::Exact(t.clone()));
        }
    }
    for i in 1..levels.len() {
        let upper = &measures[i - 1]; // value at levels[i-1]
        let before = &measures[i] + f.plateau_width(&levels[i]); // left limit at levels[i]
        if *m < *upper && *m > before {
            // strictly inside the affine band
            let t = &levels[i - 1]
                + (m - upper) * (&levels[i] - &levels[i - 1]) / (&before - upper);
            return Ok(LevelQuery::Exact(t));
        }
        if *m <= before && *m > measures[i] {
            return Ok(LevelQuery::Jump {
                level: levels[i].clone(),
                at_level: measures[i].clone(),
                before,
            });
        }
    }
    unreachable!("target measure {m} within [0, {support_measure}] not located")
}
