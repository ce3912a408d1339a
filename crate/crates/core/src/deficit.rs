//! Deficit functionals and exact lemma-level checkers.
//!
//! The two central quantities are the Riesz–Sobolev deficit
//! `D(A,B,C) = <1_{A*} * 1_{B*}, 1_{C*}> - <1_A * 1_B, 1_C>`
//! and the KPRGT deficit
//! `D'(A,B,tau) = (|A|-tau)(|B|-tau) - ∫_tau^inf |S_{A,B}(t)| dt`,
//! both nonnegative for every valid input. The checkers in this module
//! turn the exact identities and inclusions relating them into runnable
//! predicates with three-state outcomes, so randomized audits never count
//! vacuous cases as evidence.

use crate::conv::{convolve_indicators, pairing, PiecewiseLinear};
use crate::error::{Error, Result};
use crate::interval::IntervalUnion;
use crate::rational::{rint, rmax, rmin, sq, Rational};
use crate::stability::best_interval;
use num_traits::{Signed, Zero};
use std::fmt;

/// Position of `|S_{A,B}(tau)|` relative to `[||A|-|B||, |A|+|B|]`.
/// Boundary values are assigned to `Sandwich`; the identities agree there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Sandwich,
    Above,
    Below,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Regime::Sandwich => "sandwich",
            Regime::Above => "above",
            Regime::Below => "below",
        };
        write!(f, "{s}")
    }
}

/// Three-state result of a checker: randomized audits tally each state
/// separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail,
    HypothesisNotMet,
}

impl CheckOutcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail)
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckOutcome::Pass => "PASS",
            CheckOutcome::Fail => "FAIL",
            CheckOutcome::HypothesisNotMet => "hypothesis-not-met",
        };
        write!(f, "{s}")
    }
}

/// Closed form of `<1_{A*} * 1_{B*}, 1_{E*}>` as a function of the three
/// measures `(a, b, c) = (|A|, |B|, |E|)`:
///
/// * `c * min(a,b)`          when `c <= |a-b|`,
/// * `a*b - (a+b-c)^2 / 4`   when `|a-b| <= c <= a+b`,
/// * `a*b`                   when `c >= a+b`.
///
/// Continuous across the regime boundaries.
pub fn rearranged_pairing(a: &Rational, b: &Rational, c: &Rational) -> Result<Rational> {
    if !a.is_positive() {
        return Err(Error::NonpositiveMeasure(a.clone()));
    }
    if !b.is_positive() {
        return Err(Error::NonpositiveMeasure(b.clone()));
    }
    assert!(!c.is_negative(), "third measure must be nonnegative");
    let diff = (a - b).abs();
    let total = a + b;
    if *c <= diff {
        Ok(c * rmin(a, b))
    } else if *c >= total {
        Ok(a * b)
    } else {
        Ok(a * b - sq(&(total - c)) / rint(4))
    }
}

/// `D(A,B,C)` with an already-built convolution; tolerates empty `C`.
fn deficit_rs_of(
    f: &PiecewiseLinear,
    a_measure: &Rational,
    b_measure: &Rational,
    c: &IntervalUnion,
) -> Result<Rational> {
    let rearranged = rearranged_pairing(a_measure, b_measure, &c.measure())?;
    Ok(rearranged - pairing(f, c))
}

/// Riesz–Sobolev deficit `D(A,B,C) >= 0`. A negative value would be a
/// fatal engine bug, not a property of the inputs.
pub fn deficit_rs(a: &IntervalUnion, b: &IntervalUnion, c: &IntervalUnion) -> Result<Rational> {
    if a.is_empty() || b.is_empty() || c.is_empty() {
        return Err(Error::EmptySet("deficit_rs argument"));
    }
    let f = convolve_indicators(a, b);
    deficit_rs_of(&f, &a.measure(), &b.measure(), c)
}

/// KPRGT deficit `D'(A,B,tau) = (|A|-tau)(|B|-tau) - ∫_tau^inf |S(t)| dt`,
/// for `0 <= tau <= min(|A|, |B|)`.
pub fn deficit_kprgt(a: &IntervalUnion, b: &IntervalUnion, tau: &Rational) -> Result<Rational> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("deficit_kprgt argument"));
    }
    let (ma, mb) = (a.measure(), b.measure());
    let top = rmin(&ma, &mb);
    if tau.is_negative() || *tau > top {
        return Err(Error::LevelOutOfRange { tau: tau.clone(), max: top });
    }
    let tail = crate::conv::tail_integral(a, b, tau);
    Ok((ma - tau) * (mb - tau) - tail)
}

/// Largest `eta` with `|A_i| + |A_j| >= |A_k| + eta * max` over all
/// permutations; equals `(|A|+|B|+|C| - 2 max) / max`. May be `<= 0` when
/// the triple is not strictly admissible. A positive value implies the
/// comparability bound `min >= eta * max`.
pub fn admissibility_eta(
    a: &IntervalUnion,
    b: &IntervalUnion,
    c: &IntervalUnion,
) -> Result<Rational> {
    if a.is_empty() || b.is_empty() || c.is_empty() {
        return Err(Error::EmptySet("admissibility_eta argument"));
    }
    let (ma, mb, mc) = (a.measure(), b.measure(), c.measure());
    let max = rmax(&rmax(&ma, &mb), &mc);
    let total = &ma + &mb + &mc;
    Ok((total - rint(2) * &max) / max)
}

fn classify_regime(s_measure: &Rational, ma: &Rational, mb: &Rational) -> Regime {
    let low = (ma - mb).abs();
    let high = ma + mb;
    if *s_measure > high {
        Regime::Above
    } else if *s_measure < low {
        Regime::Below
    } else {
        Regime::Sandwich
    }
}

/// The measured quantities of one configuration: both deficits, the level,
/// `sigma` defined by `|S(tau)| = |A|+|B| - 2 sigma`, the admissibility
/// margin, and the regime of `|S(tau)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficitReport {
    pub d_rs: Rational,
    pub d_kprgt: Option<Rational>,
    pub tau: Rational,
    pub sigma: Rational,
    pub eta_max: Rational,
    pub regime: Regime,
}

/// Evaluates a full [`DeficitReport`]. With no explicit level, `tau` is the
/// natural one determined by `|C| = |A|+|B| - 2 tau`, clamped into
/// `[0, min(|A|,|B|)]`; an explicit out-of-range `tau` is an error.
pub fn deficit_report(
    a: &IntervalUnion,
    b: &IntervalUnion,
    c: &IntervalUnion,
    tau: Option<&Rational>,
) -> Result<DeficitReport> {
    let d_rs = deficit_rs(a, b, c)?;
    let eta_max = admissibility_eta(a, b, c)?;
    let (ma, mb) = (a.measure(), b.measure());
    let top = rmin(&ma, &mb);
    let tau = match tau {
        Some(t) => {
            if t.is_negative() || *t > top {
                return Err(Error::LevelOutOfRange { tau: t.clone(), max: top });
            }
            t.clone()
        }
        None => {
            let natural = (&ma + &mb - c.measure()) / rint(2);
            rmin(&rmax(&natural, &Rational::zero()), &top)
        }
    };
    let d_kprgt = deficit_kprgt(a, b, &tau)?;
    let s_measure = crate::conv::superlevel(a, b, &tau).measure();
    let sigma = (&ma + &mb - &s_measure) / rint(2);
    let regime = classify_regime(&s_measure, &ma, &mb);
    Ok(DeficitReport {
        d_rs,
        d_kprgt: Some(d_kprgt),
        tau,
        sigma,
        eta_max,
        regime,
    })
}

/// One verified identity relating `D'` to `D` on a superlevel set; the
/// residual must vanish exactly on every valid input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub regime: Regime,
    pub lhs: Rational,
    pub rhs: Rational,
    pub residual: Rational,
}

/// Verifies the exact identity between the two deficits at level `tau`.
///
/// With `S = S_{A,B}(tau)`, `m = min(|A|,|B|)`, `M = max(|A|,|B|)`, and
/// `sigma` defined by `|S| = |A|+|B| - 2 sigma`:
///
/// * sandwich: `D' = D(A,B,S) + (sigma - tau)^2`;
/// * above:    `D' = D(A,B,S) + tau (|S| - |A| - |B|) + tau^2`;
/// * below:    `D' = D(A,B,S) + (m - tau)(M - |S| - tau)`.
///
/// `D'` is computed here through the clipped integral
/// `∫ max(f - tau, 0)` rather than the layer-cake route, so the residual
/// genuinely cross-checks the superlevel extraction, the pairing
/// integration, and the closed form against each other.
pub fn identity_check(
    a: &IntervalUnion,
    b: &IntervalUnion,
    tau: &Rational,
) -> Result<IdentityReport> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("identity_check argument"));
    }
    let (ma, mb) = (a.measure(), b.measure());
    let top = rmin(&ma, &mb);
    if tau.is_negative() || *tau > top {
        return Err(Error::LevelOutOfRange { tau: tau.clone(), max: top });
    }

    let f = convolve_indicators(a, b);
    let s = f.superlevel(tau);
    let s_measure = s.measure();

    let lhs = (&ma - tau) * (&mb - tau) - f.integral_above_level(tau);

    let d_term = deficit_rs_of(&f, &ma, &mb, &s)?;
    let regime = classify_regime(&s_measure, &ma, &mb);
    let extra = match regime {
        Regime::Sandwich => {
            let sigma = (&ma + &mb - &s_measure) / rint(2);
            sq(&(sigma - tau))
        }
        Regime::Above => tau * (&s_measure - &ma - &mb) + sq(tau),
        Regime::Below => {
            let m = rmin(&ma, &mb);
            let big = rmax(&ma, &mb);
            (m - tau) * (big - &s_measure - tau)
        }
    };
    let rhs = d_term + extra;
    let residual = &lhs - &rhs;
    Ok(IdentityReport { regime, lhs, rhs, residual })
}

/// Superlevel-approximation audit for a near-extremizing triple.
#[derive(Debug, Clone)]
pub struct SuperlevelApproxReport {
    pub outcome: CheckOutcome,
    pub deficit: Rational,
    pub tau: Rational,
    /// `|S(tau) △ E|`
    pub symdiff: Rational,
    /// `|S(tau)| - |E|`
    pub measure_drift: Rational,
    pub symdiff_ok: bool,
    pub drift_ok: bool,
    pub monotone_ok: bool,
}

/// Checks, for `D = D(A,B,E)` and `tau` defined by `|E| = |A|+|B| - 2 tau`:
/// `|S(tau) △ E|^2 <= 16 D`, `(|S(tau)| - |E|)^2 <= 16 D`, and the deficit
/// monotonicity `D(A,B,S(tau)) <= D(A,B,E)` — provided the hypothesis
/// `||A|-|B|| + 2 sqrt(D) < |E| < |A|+|B| - 2 sqrt(D)` holds (tested by
/// comparing squares, so everything stays rational).
pub fn superlevel_approx_check(
    a: &IntervalUnion,
    b: &IntervalUnion,
    e: &IntervalUnion,
) -> Result<SuperlevelApproxReport> {
    let deficit = deficit_rs(a, b, e)?;
    let (ma, mb, me) = (a.measure(), b.measure(), e.measure());
    let low = (&ma - &mb).abs();
    let high = &ma + &mb;
    let tau = (&high - &me) / rint(2);
    let four_d = rint(4) * &deficit;

    // |E| - ||A|-|B|| > 2 sqrt(D)  and  |A|+|B| - |E| > 2 sqrt(D)
    let left_slack = &me - &low;
    let right_slack = &high - &me;
    let hypothesis = left_slack.is_positive()
        && right_slack.is_positive()
        && sq(&left_slack) > four_d
        && sq(&right_slack) > four_d;

    if !hypothesis {
        // tau may be out of range here (e.g. negative for oversized E), so
        // the superlevel quantities are not evaluated
        return Ok(SuperlevelApproxReport {
            outcome: CheckOutcome::HypothesisNotMet,
            deficit,
            tau,
            symdiff: Rational::zero(),
            measure_drift: Rational::zero(),
            symdiff_ok: false,
            drift_ok: false,
            monotone_ok: false,
        });
    }

    let f = convolve_indicators(a, b);
    let s = f.superlevel(&tau);
    let symdiff = s.symmetric_difference(e).measure();
    let measure_drift = s.measure() - &me;
    let sixteen_d = rint(16) * &deficit;
    let symdiff_ok = sq(&symdiff) <= sixteen_d;
    let drift_ok = sq(&measure_drift) <= sixteen_d;
    let monotone_ok = deficit_rs_of(&f, &ma, &mb, &s)? <= deficit;

    let outcome = CheckOutcome::from_bool(symdiff_ok && drift_ok && monotone_ok);
    Ok(SuperlevelApproxReport {
        outcome,
        deficit,
        tau,
        symdiff,
        measure_drift,
        symdiff_ok,
        drift_ok,
        monotone_ok,
    })
}

/// Superlevel-difference inclusion audit.
#[derive(Debug, Clone)]
pub struct InclusionReport {
    pub outcome: CheckOutcome,
    /// Vacuous: one of the superlevel sets is empty, or the target level is
    /// negative so the containing set is the whole line.
    pub vacuous: bool,
    /// Measure of `LHS \ RHS` (zero on pass).
    pub uncovered: Rational,
}

/// Checks `S_{U,V}(a1) - S_{U,V}(a2) ⊂ S_{U,-U}(a1 + a2 - |V|)` up to null
/// sets, computing the difference set through Minkowski sums.
pub fn difference_inclusion_check(
    u: &IntervalUnion,
    v: &IntervalUnion,
    alpha1: &Rational,
    alpha2: &Rational,
) -> Result<InclusionReport> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptySet("difference_inclusion_check argument"));
    }
    if !alpha1.is_positive() || !alpha2.is_positive() {
        return Err(Error::BadParameter(format!(
            "levels must be positive, got {alpha1} and {alpha2}"
        )));
    }
    let f = convolve_indicators(u, v);
    let s1 = f.superlevel(alpha1);
    let s2 = f.superlevel(alpha2);
    if s1.is_empty() || s2.is_empty() {
        return Ok(InclusionReport {
            outcome: CheckOutcome::Pass,
            vacuous: true,
            uncovered: Rational::zero(),
        });
    }
    let beta = alpha1 + alpha2 - v.measure();
    if beta.is_negative() {
        // the containing superlevel set is the whole line
        return Ok(InclusionReport {
            outcome: CheckOutcome::Pass,
            vacuous: true,
            uncovered: Rational::zero(),
        });
    }
    let lhs = s1.minkowski_sum(&s2.reflect())?;
    let rhs = convolve_indicators(u, &u.reflect()).superlevel(&beta);
    let uncovered = lhs.difference(&rhs).measure();
    Ok(InclusionReport {
        outcome: CheckOutcome::from_bool(uncovered.is_zero()),
        vacuous: false,
        uncovered,
    })
}

/// Freiman-type sumset audit.
#[derive(Debug, Clone)]
pub struct KeystoneReport {
    pub outcome: CheckOutcome,
    pub diameter: Rational,
    /// `|A+B| - |B|`
    pub bound: Rational,
}

/// If `|A+B| < |A| + |B| + min(|A|,|B|)`, checks
/// `diameter(A) <= |A+B| - |B|`; otherwise reports hypothesis-not-met.
pub fn keystone_check(a: &IntervalUnion, b: &IntervalUnion) -> Result<KeystoneReport> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("keystone_check argument"));
    }
    let sum = a.minkowski_sum(b)?;
    let sum_measure = sum.measure();
    let (ma, mb) = (a.measure(), b.measure());
    let diameter = a.diameter()?;
    let bound = &sum_measure - &mb;
    let hypothesis = sum_measure < &ma + &mb + rmin(&ma, &mb);
    let outcome = if hypothesis {
        CheckOutcome::from_bool(diameter <= bound)
    } else {
        CheckOutcome::HypothesisNotMet
    };
    Ok(KeystoneReport { outcome, diameter, bound })
}

/// Torus sumset audit.
#[derive(Debug, Clone)]
pub struct KempermanReport {
    pub outcome: CheckOutcome,
    pub sum_measure: Rational,
    pub bound: Rational,
}

/// Checks `|π(A) + π(B)| >= min(|π(A)| + |π(B)|, 1)` on the unit circle,
/// with the sum of the projections re-projected.
pub fn kemperman_check(a: &IntervalUnion, b: &IntervalUnion) -> Result<KempermanReport> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet("kemperman_check argument"));
    }
    let pa = a.torus_project();
    let pb = b.torus_project();
    let sum = pa.minkowski_sum(&pb)?.torus_project();
    let sum_measure = sum.measure();
    let bound = rmin(&(pa.measure() + pb.measure()), &Rational::from_integer(1.into()));
    Ok(KempermanReport {
        outcome: CheckOutcome::from_bool(sum_measure >= bound),
        sum_measure,
        bound,
    })
}

/// Truncation monotonicity audit.
#[derive(Debug, Clone)]
pub struct TruncationReport {
    pub outcome: CheckOutcome,
    pub base_deficit: Rational,
    pub truncated_deficit: Rational,
    /// Pointwise bound `f(x) <= f'(x) + eta + eta'` verified on the merged
    /// knot grid (which decides it everywhere, both being piecewise affine).
    pub pointwise_ok: bool,
}

/// Checks `D(A_{eta,eta'}, B_{eta',eta}, C) <= D(A, B, C)` — note the
/// swapped truncation order on `B` — together with the pointwise bound
/// `(1_A * 1_B)(x) <= (1_{A'} * 1_{B'})(x) + eta + eta'`.
pub fn truncation_deficit_check(
    a: &IntervalUnion,
    b: &IntervalUnion,
    c: &IntervalUnion,
    eta: &Rational,
    eta_prime: &Rational,
) -> Result<TruncationReport> {
    let total_cut = eta + eta_prime;
    let (ma, mb) = (a.measure(), b.measure());
    if eta.is_negative() || eta_prime.is_negative() || total_cut >= rmin(&ma, &mb) {
        return Err(Error::BadTruncation {
            left: eta.clone(),
            right: eta_prime.clone(),
            measure: rmin(&ma, &mb),
        });
    }
    if c.measure() > &ma + &mb {
        return Err(Error::BadParameter(format!(
            "|C| = {} exceeds |A| + |B| = {}",
            c.measure(),
            &ma + &mb
        )));
    }
    let a_cut = a.truncate(eta, eta_prime)?;
    let b_cut = b.truncate(eta_prime, eta)?;
    let base_deficit = deficit_rs(a, b, c)?;
    let truncated_deficit = deficit_rs(&a_cut, &b_cut, c)?;

    let f = convolve_indicators(a, b);
    let g = convolve_indicators(&a_cut, &b_cut);
    let mut grid: Vec<Rational> = f.knots().iter().chain(g.knots().iter()).cloned().collect();
    grid.sort();
    grid.dedup();
    let pointwise_ok = grid
        .iter()
        .all(|x| f.eval(x) <= g.eval(x) + &total_cut);

    Ok(TruncationReport {
        outcome: CheckOutcome::from_bool(truncated_deficit <= base_deficit && pointwise_ok),
        base_deficit,
        truncated_deficit,
        pointwise_ok,
    })
}

/// Equal-measure near-extremizer audit.
#[derive(Debug, Clone)]
pub struct EqualMeasureReport {
    pub outcome: CheckOutcome,
    pub deficit: Rational,
    /// `gamma = |A| - |C|`
    pub gamma: Rational,
    /// `|S_{A,-A}(gamma)|`
    pub superlevel_measure: Rational,
    /// `|C △ I|` for the best interval `I`
    pub interval_gap: Rational,
    pub measure_ok: bool,
    pub gap_ok: bool,
}

/// For `|A| = |B|` and `D = D(A,B,C)` small against the admissibility
/// margin (`sqrt(D) < eta |A| / 24` and `|C| <= |A| - 4 sqrt(D)`, compared
/// as squares), checks `(|S_{A,-A}(gamma)| - 2|C|)^2 <= 64 D` with
/// `gamma = |A| - |C|`, and that the best interval approximation of `C`
/// satisfies `|C △ I|^2 <= 196 D`.
pub fn equal_measure_case_check(
    a: &IntervalUnion,
    b: &IntervalUnion,
    c: &IntervalUnion,
) -> Result<EqualMeasureReport> {
    let deficit = deficit_rs(a, b, c)?;
    let eta = admissibility_eta(a, b, c)?;
    let (ma, mc) = (a.measure(), c.measure());
    let gamma = &ma - &mc;

    let equal_measures = ma == b.measure();
    // sqrt(D) < eta |A| / 24  <=>  576 D < eta^2 |A|^2 (eta > 0)
    let margin_ok = eta.is_positive() && rint(576) * &deficit < sq(&(&eta * &ma));
    // |C| <= |A| - 4 sqrt(D)  <=>  gamma >= 0 and gamma^2 >= 16 D
    let room_ok = !gamma.is_negative() && sq(&gamma) >= rint(16) * &deficit;
    let hypothesis = equal_measures && margin_ok && room_ok;

    let self_difference = convolve_indicators(a, &a.reflect());
    let superlevel_measure = self_difference.superlevel(&gamma.clone().max(Rational::zero())).measure();
    let interval_gap = best_interval(c).gap;

    let measure_ok =
        sq(&(&superlevel_measure - rint(2) * &mc)) <= rint(64) * &deficit;
    let gap_ok = sq(&interval_gap) <= rint(196) * &deficit;

    let outcome = if !hypothesis {
        CheckOutcome::HypothesisNotMet
    } else {
        CheckOutcome::from_bool(measure_ok && gap_ok)
    };
    Ok(EqualMeasureReport {
        outcome,
        deficit,
        gamma,
        superlevel_measure,
        interval_gap,
        measure_ok,
        gap_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::union_of;
    use crate::rational::{parse_rational, rat};

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn iu(pairs: &[(&str, &str)]) -> IntervalUnion {
        IntervalUnion::normalize(
            pairs.iter().map(|(a, b)| (q(a), q(b))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rearranged_pairing_examples() {
        assert_eq!(
            rearranged_pairing(&rat(1, 1), &rat(1, 1), &rat(1, 1)).unwrap(),
            q("3/4")
        );
        assert_eq!(
            rearranged_pairing(&rat(2, 1), &rat(1, 1), &rat(5, 1)).unwrap(),
            rat(2, 1)
        );
        assert_eq!(
            rearranged_pairing(&rat(3, 1), &rat(1, 1), &rat(1, 1)).unwrap(),
            rat(1, 1)
        );
        assert!(rearranged_pairing(&rat(0, 1), &rat(1, 1), &rat(1, 1)).is_err());
    }

    #[test]
    fn rearranged_pairing_continuous_at_boundaries() {
        // at c = |a-b| and c = a+b the adjacent formulas agree
        let (a, b) = (rat(3, 1), rat(1, 1));
        let at_low = rearranged_pairing(&a, &b, &rat(2, 1)).unwrap();
        assert_eq!(at_low, rat(2, 1) * rat(1, 1));
        assert_eq!(at_low, &a * &b - sq(&(&a + &b - rat(2, 1))) / rat(4, 1));
        let at_high = rearranged_pairing(&a, &b, &rat(4, 1)).unwrap();
        assert_eq!(at_high, &a * &b);
    }

    #[test]
    fn deficit_rs_examples() {
        // extremizer: centered intervals with matching measures
        let a = iu(&[("-1", "1")]);
        let c = iu(&[("-3/4", "3/4")]);
        assert_eq!(deficit_rs(&a, &a, &c).unwrap(), rat(0, 1));

        let unit = union_of(&[(0, 1)]);
        assert_eq!(deficit_rs(&unit, &unit, &unit).unwrap(), q("1/4"));

        assert!(deficit_rs(&unit, &unit, &IntervalUnion::empty()).is_err());
    }

    #[test]
    fn deficit_rs_sharpness_family() {
        // A = B = (-1,1), C = [-1/2,1/2] ∪ [1/2+d, 1/2+2d], d = 1/8:
        // deficit is exactly (5/4) d^2 = 5/256.
        let a = iu(&[("-1", "1")]);
        let c = iu(&[("-1/2", "1/2"), ("5/8", "3/4")]);
        assert_eq!(deficit_rs(&a, &a, &c).unwrap(), q("5/256"));
    }

    #[test]
    fn deficit_kprgt_examples() {
        let c = iu(&[("-1/2", "1/2")]);
        for t in ["0", "1/3", "1/2", "1"] {
            assert_eq!(deficit_kprgt(&c, &c, &q(t)).unwrap(), rat(0, 1));
        }
        let a = union_of(&[(0, 1), (2, 3)]);
        assert_eq!(deficit_kprgt(&a, &a, &rat(0, 1)).unwrap(), rat(0, 1));
        let b = union_of(&[(0, 2)]);
        let d = deficit_kprgt(&a, &b, &q("1/2")).unwrap();
        assert!(!d.is_negative());
        assert!(deficit_kprgt(&a, &b, &rat(5, 1)).is_err());
    }

    #[test]
    fn admissibility_examples() {
        let one = union_of(&[(0, 1)]);
        let two = union_of(&[(0, 2)]);
        let three = union_of(&[(0, 3)]);
        assert_eq!(admissibility_eta(&one, &one, &one).unwrap(), rat(1, 1));
        assert_eq!(admissibility_eta(&two, &one, &one).unwrap(), rat(0, 1));
        assert_eq!(admissibility_eta(&two, &one, &three).unwrap(), rat(0, 1));
        // comparability: eta > 0 implies min >= eta * max
        let a = iu(&[("0", "3/2")]);
        let eta = admissibility_eta(&a, &one, &one).unwrap();
        assert!(eta.is_positive());
        assert!(rat(1, 1) >= eta * q("3/2"));
    }

    #[test]
    fn identity_check_examples() {
        let c = iu(&[("-1/2", "1/2")]);
        let r = identity_check(&c, &c, &q("1/4")).unwrap();
        assert_eq!(r.regime, Regime::Sandwich);
        assert!(r.lhs.is_zero());
        assert!(r.residual.is_zero());

        // wide against narrow at tau = 3/4
        let a = iu(&[("-2", "2")]);
        let r = identity_check(&a, &c, &q("3/4")).unwrap();
        assert!(r.residual.is_zero());

        // spread components push |S| above |A| + |B|
        let spread = union_of(&[(0, 1), (5, 6), (10, 11)]);
        let f = convolve_indicators(&spread, &spread);
        let tau = q("1/10");
        assert!(f.superlevel(&tau).measure() > rat(2, 1) * spread.measure());
        let r = identity_check(&spread, &spread, &tau).unwrap();
        assert_eq!(r.regime, Regime::Above);
        assert!(r.residual.is_zero());

        // tau = min(|A|,|B|) has an empty superlevel set
        let b = union_of(&[(0, 2)]);
        let r = identity_check(&spread, &b, &rat(2, 1)).unwrap();
        assert!(r.residual.is_zero());

        assert!(identity_check(&b, &b, &rat(3, 1)).is_err());
    }

    #[test]
    fn identity_regime_boundaries_agree() {
        // at |S| = ||A|-|B|| the sandwich and below formulas coincide,
        // at |S| = |A|+|B| the sandwich and above formulas coincide
        let (ma, mb, tau) = (rat(3, 1), rat(2, 1), rat(1, 2));
        let m = rmin(&ma, &mb);
        let big = rmax(&ma, &mb);
        let s_low = (&ma - &mb).abs();
        let sigma_low = (&ma + &mb - &s_low) / rat(2, 1);
        assert_eq!(
            sq(&(&sigma_low - &tau)),
            (&m - &tau) * (&big - &s_low - &tau)
        );
        let s_high = &ma + &mb;
        let sigma_high = (&ma + &mb - &s_high) / rat(2, 1);
        assert_eq!(
            sq(&(&sigma_high - &tau)),
            &tau * (&s_high - &ma - &mb) + sq(&tau)
        );
    }

    #[test]
    fn superlevel_approx_trivial_cases() {
        // E equal to the superlevel set itself: everything vanishes
        let a = iu(&[("-1", "1")]);
        let e = iu(&[("-3/4", "3/4")]);
        let r = superlevel_approx_check(&a, &a, &e).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert!(r.symdiff.is_zero());
        assert!(r.deficit.is_zero());
        assert_eq!(r.tau, q("5/4"));
    }

    #[test]
    fn superlevel_approx_rejects_out_of_range_measures() {
        // |E| above |A| + |B| puts the natural level below zero: the
        // hypothesis fails and nothing is evaluated
        let a = iu(&[("-1", "1")]);
        let e = iu(&[("-10", "10")]);
        let r = superlevel_approx_check(&a, &a, &e).unwrap();
        assert_eq!(r.outcome, CheckOutcome::HypothesisNotMet);
        assert!(r.tau.is_negative());

        // |E| below ||A| - |B|| fails the other side
        let b = iu(&[("-3", "3")]);
        let tiny = iu(&[("0", "1/2")]);
        let r = superlevel_approx_check(&a, &b, &tiny).unwrap();
        assert_eq!(r.outcome, CheckOutcome::HypothesisNotMet);
    }

    #[test]
    fn superlevel_approx_sharpness_family() {
        let a = iu(&[("-1", "1")]);
        // gamma = 1/2, delta = 1/16
        let e = iu(&[("-1/2", "1/2"), ("9/16", "5/8")]);
        let r = superlevel_approx_check(&a, &a, &e).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert!(r.symdiff_ok && r.drift_ok && r.monotone_ok);
    }

    #[test]
    fn inclusion_examples() {
        let u = iu(&[("-1/2", "1/2")]);
        let r = difference_inclusion_check(&u, &u, &q("3/4"), &q("3/4")).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert!(!r.vacuous);
        assert!(r.uncovered.is_zero());

        // alpha above the sup makes the left side empty: vacuous pass
        let r = difference_inclusion_check(&u, &u, &rat(2, 1), &q("1/4")).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert!(r.vacuous);

        assert!(difference_inclusion_check(&u, &u, &rat(0, 1), &q("1/4")).is_err());
    }

    #[test]
    fn keystone_examples() {
        let a = union_of(&[(0, 1)]);
        let b = union_of(&[(0, 2)]);
        let r = keystone_check(&a, &b).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert_eq!(r.diameter, r.bound); // equality for intervals

        let spread = union_of(&[(0, 1), (5, 6)]);
        let r = keystone_check(&spread, &a).unwrap();
        assert_eq!(r.outcome, CheckOutcome::HypothesisNotMet);
    }

    #[test]
    fn kemperman_examples() {
        let arc = iu(&[("0", "3/10")]);
        let r = kemperman_check(&arc, &arc).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert_eq!(r.sum_measure, q("3/5"));
        assert_eq!(r.sum_measure, r.bound);

        // |A| + |B| >= 1 with arcs: the sum covers the circle
        let big = iu(&[("0", "3/5")]);
        let r = kemperman_check(&big, &big).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert_eq!(r.sum_measure, rat(1, 1));
    }

    #[test]
    fn truncation_examples() {
        let a = union_of(&[(0, 2)]);
        let b = union_of(&[(-1, 1)]);
        let c = union_of(&[(0, 3)]);
        let r = truncation_deficit_check(&a, &b, &c, &rat(0, 1), &rat(0, 1)).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert_eq!(r.base_deficit, r.truncated_deficit);

        let r = truncation_deficit_check(&a, &b, &c, &q("1/4"), &q("1/8")).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert!(r.pointwise_ok);

        assert!(truncation_deficit_check(&a, &b, &c, &rat(1, 1), &rat(1, 1)).is_err());
    }

    #[test]
    fn equal_measure_example() {
        let a = iu(&[("-1", "1")]);
        let c = iu(&[("-3/4", "3/4")]);
        let r = equal_measure_case_check(&a, &a, &c).unwrap();
        assert_eq!(r.outcome, CheckOutcome::Pass);
        assert_eq!(r.gamma, q("1/2"));
        assert_eq!(r.superlevel_measure, rat(3, 1)); // exactly 2|C|
        assert!(r.interval_gap.is_zero());
    }

    #[test]
    fn deficit_report_fields() {
        let unit = union_of(&[(0, 1)]);
        let rep = deficit_report(&unit, &unit, &unit, None).unwrap();
        assert_eq!(rep.d_rs, q("1/4"));
        assert_eq!(rep.tau, q("1/2"));
        assert_eq!(rep.eta_max, rat(1, 1));
        assert_eq!(rep.regime, Regime::Sandwich);
        let dk = rep.d_kprgt.unwrap();
        assert!(!dk.is_negative());
    }

    #[test]
    fn deficit_report_fields_satisfy_the_identities() {
        // the report's (d_kprgt, tau, sigma, regime) must be consistent
        // with the identity checker on the same configuration
        let cases = [
            (union_of(&[(0, 1), (2, 3)]), union_of(&[(-1, 2)]), q("1/4")),
            (union_of(&[(0, 2)]), union_of(&[(0, 1), (5, 6)]), q("1/2")),
            (union_of(&[(-2, 2)]), union_of(&[(0, 1)]), q("3/4")),
        ];
        for (a, b, tau) in cases {
            let c = union_of(&[(0, 1)]);
            let rep = deficit_report(&a, &b, &c, Some(&tau)).unwrap();
            let identity = identity_check(&a, &b, &tau).unwrap();
            assert!(identity.residual.is_zero());
            assert_eq!(rep.d_kprgt.as_ref().unwrap(), &identity.lhs);
            assert_eq!(rep.regime, identity.regime);
            if rep.regime == Regime::Sandwich {
                assert!(identity.lhs >= sq(&(&rep.sigma - &rep.tau)));
            }
        }
    }
}
