//! Best-interval approximation and the stability-theorem verifiers.
//!
//! `best_interval` certifies the distance from a union to the nearest
//! single interval; the `verify_*` functions evaluate the quantitative
//! stability statements for the Riesz–Sobolev and KPRGT inequalities with
//! configurable constants; `sharpness_probe` traces the two-interval family
//! whose deficit scales exactly quadratically in the notch width.

use crate::conv::convolve_indicators;
use crate::deficit::{admissibility_eta, deficit_kprgt, deficit_rs, CheckOutcome};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalUnion};
use crate::rational::{rint, rmax, rmin, sq, to_f64, Rational};
use num_traits::{Signed, ToPrimitive, Zero};

/// The interval minimizing `|A △ I|`, with the attained gap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestInterval {
    /// `None` only for the empty set.
    pub interval: Option<Interval>,
    /// The minimal `|A △ I|`; zero when `A` is an interval (or empty).
    pub gap: Rational,
}

impl BestInterval {
    pub fn midpoint(&self) -> Rational {
        self.interval
            .as_ref()
            .map(|i| i.midpoint())
            .unwrap_or_else(Rational::zero)
    }
}

/// Minimizes `|A △ I|` over all bounded intervals `I`.
///
/// The optimum spans a contiguous run of components, so the problem is a
/// maximum-subarray scan over the alternating sequence of component masses
/// and gap lengths: `|A △ I|` for the hull of components `i..j` equals
/// `|A| - (Σ masses - Σ gaps)` over that run. Ties prefer the smallest left
/// endpoint, then the smallest right endpoint.
pub fn best_interval(a: &IntervalUnion) -> BestInterval {
    let comps = a.components();
    if comps.is_empty() {
        return BestInterval { interval: None, gap: Rational::zero() };
    }

    // Kadane scan: best run ending at j, extending on ties to keep the
    // earliest start.
    let mut cur_value = comps[0].length();
    let mut cur_start = 0usize;
    let mut best_value = cur_value.clone();
    let mut best_range = (0usize, 0usize);
    for j in 1..comps.len() {
        let gap = &comps[j].lo - &comps[j - 1].hi;
        let mass = comps[j].length();
        let extended = &cur_value - &gap + &mass;
        if extended >= mass {
            cur_value = extended;
        } else {
            cur_value = mass;
            cur_start = j;
        }
        let better = cur_value > best_value
            || (cur_value == best_value && cur_start < best_range.0);
        if better {
            best_value = cur_value.clone();
            best_range = (cur_start, j);
        }
    }

    let (i, j) = best_range;
    let interval = Interval {
        lo: comps[i].lo.clone(),
        hi: comps[j].hi.clone(),
    };
    let gap = a.measure() - best_value;
    BestInterval { interval: Some(interval), gap }
}

/// Measured stability data for one admissible triple.
#[derive(Debug, Clone)]
pub struct StabilityReport {
    /// Normalized deficit: `D = epsilon * max(|A|,|B|,|C|)^2`.
    pub epsilon: Rational,
    pub eta: Rational,
    pub d_rs: Rational,
    pub max_measure: Rational,
    /// `(|A △ I|, |B △ J|, |C △ L|)` for the best intervals.
    pub gaps: [Rational; 3],
    /// Midpoints of the best intervals.
    pub centers: [Rational; 3],
    /// `|a + b - c|` for the three centers.
    pub center_discrepancy: Rational,
    /// Float rendering of `gap_max * eta / (sqrt(epsilon) * max)`.
    pub ratio_gap: f64,
    /// Float rendering of `|a+b-c| * eta^2 / (epsilon^{1/4} * max)`.
    pub ratio_center: f64,
    /// Whether `epsilon <= eta^4 / K` for the configured `K`.
    pub hypothesis_met: bool,
}

impl StabilityReport {
    pub fn max_gap(&self) -> Rational {
        rmax(&rmax(&self.gaps[0], &self.gaps[1]), &self.gaps[2])
    }

    /// Exact form of the interval-approximation conclusion:
    /// every gap satisfies `gap * eta <= K * sqrt(epsilon) * max`,
    /// compared as squares (`(gap eta)^2 <= K^2 D`).
    pub fn gap_bound_ok(&self, k: &Rational) -> bool {
        let rhs = sq(k) * &self.d_rs;
        self.gaps.iter().all(|g| sq(&(g * &self.eta)) <= rhs)
    }

    /// Exact form of the center conclusion:
    /// `|a+b-c| * eta^2 <= K * epsilon^{1/4} * max`, compared as fourth
    /// powers (`(disc eta^2)^4 <= K^4 D max^2`).
    pub fn center_bound_ok(&self, k: &Rational) -> bool {
        let lhs = sq(&sq(&(&self.center_discrepancy * sq(&self.eta))));
        let rhs = sq(&sq(k)) * &self.d_rs * sq(&self.max_measure);
        lhs <= rhs
    }
}

fn ratio_or_edge(numer: f64, denom: f64) -> f64 {
    if denom > 0.0 {
        numer / denom
    } else if numer == 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

/// Evaluates the main stability report for a triple; `None` when the triple
/// is not strictly admissible. The report records dimensionless ratios and
/// the `epsilon <= eta^4 / K` hypothesis flag; pass/fail against frozen
/// constants is the caller's decision.
pub fn verify_main_theorem(
    a: &IntervalUnion,
    b: &IntervalUnion,
    c: &IntervalUnion,
    k: &Rational,
) -> Result<Option<StabilityReport>> {
    if !k.is_positive() {
        return Err(Error::BadParameter(format!("constant K must be positive, got {k}")));
    }
    let eta = admissibility_eta(a, b, c)?;
    if !eta.is_positive() {
        return Ok(None);
    }
    let d_rs = deficit_rs(a, b, c)?;
    let max_measure = rmax(&rmax(&a.measure(), &b.measure()), &c.measure());
    let epsilon = &d_rs / sq(&max_measure);

    let (ba, bb, bc) = (best_interval(a), best_interval(b), best_interval(c));
    let gaps = [ba.gap.clone(), bb.gap.clone(), bc.gap.clone()];
    let centers = [ba.midpoint(), bb.midpoint(), bc.midpoint()];
    let center_discrepancy = (&centers[0] + &centers[1] - &centers[2]).abs();

    let hypothesis_met = &epsilon * k <= sq(&sq(&eta));

    let max_gap = rmax(&rmax(&gaps[0], &gaps[1]), &gaps[2]);
    let d_f = to_f64(&d_rs);
    let ratio_gap = ratio_or_edge(to_f64(&max_gap) * to_f64(&eta), d_f.sqrt());
    let ratio_center = ratio_or_edge(
        to_f64(&center_discrepancy) * to_f64(&sq(&eta)),
        (d_f * to_f64(&sq(&max_measure))).powf(0.25),
    );

    Ok(Some(StabilityReport {
        epsilon,
        eta,
        d_rs,
        max_measure,
        gaps,
        centers,
        center_discrepancy,
        ratio_gap,
        ratio_center,
        hypothesis_met,
    }))
}

/// Sharpened-inequality audit: `D >= c0 * eta^2 * |A △ I|^2`.
#[derive(Debug, Clone)]
pub struct SharpenedRsReport {
    pub outcome: CheckOutcome,
    pub deficit: Rational,
    pub threshold: Rational,
    /// The largest constant that would pass, `D / (eta^2 gap^2)`; `None`
    /// when the gap vanishes (every constant passes).
    pub best_passing_c0: Option<Rational>,
}

/// Checks the sharpened lower bound for the deficit against the candidate
/// constant `c0`, scanning the first set's interval gap.
pub fn verify_sharpened_rs(
    a: &IntervalUnion,
    b: &IntervalUnion,
    c: &IntervalUnion,
    c0: &Rational,
) -> Result<SharpenedRsReport> {
    if c0.is_negative() {
        return Err(Error::BadParameter(format!("constant c0 must be nonnegative, got {c0}")));
    }
    let eta = admissibility_eta(a, b, c)?;
    let deficit = deficit_rs(a, b, c)?;
    let gap = best_interval(a).gap;
    let threshold = c0 * sq(&eta) * sq(&gap);
    let best_passing_c0 = if gap.is_positive() && eta.is_positive() {
        Some(&deficit / (sq(&eta) * sq(&gap)))
    } else {
        None
    };
    let outcome = if !eta.is_positive() {
        CheckOutcome::HypothesisNotMet
    } else {
        CheckOutcome::from_bool(deficit >= threshold)
    };
    Ok(SharpenedRsReport { outcome, deficit, threshold, best_passing_c0 })
}

/// KPRGT stability audit.
#[derive(Debug, Clone)]
pub struct KprgtStabilityReport {
    pub outcome: CheckOutcome,
    pub d_kprgt: Option<Rational>,
    /// Whether `||A|-|B|| <= |S(tau)| <= |A|+|B|` (must hold whenever the
    /// hypotheses are met).
    pub sandwich_ok: bool,
    pub gap_a: Rational,
    pub gap_b: Rational,
}

/// Verifies the KPRGT stability statement with margin `eta` and constant
/// `K`: under the hypotheses
/// `min >= eta (1-eta)^{-1} max`, `tau in [eta max, (1-eta) min]`, and
/// `D' < min(tau^2, (min - tau)^2, eta^8 max^2 / K)`, the superlevel
/// measure is sandwiched and both interval gaps satisfy
/// `gap <= K sqrt(D')` (compared as squares).
pub fn verify_kprgt_stability(
    a: &IntervalUnion,
    b: &IntervalUnion,
    tau: &Rational,
    eta: &Rational,
    k: &Rational,
) -> Result<KprgtStabilityReport> {
    if !k.is_positive() {
        return Err(Error::BadParameter(format!("constant K must be positive, got {k}")));
    }
    let (ma, mb) = (a.measure(), b.measure());
    let min_m = rmin(&ma, &mb);
    let max_m = rmax(&ma, &mb);
    let gap_a = best_interval(a).gap;
    let gap_b = best_interval(b).gap;

    let eta_ok = eta.is_positive() && *eta <= crate::rational::rat(1, 2);
    let one = Rational::from_integer(1.into());
    let comparable = &min_m * (&one - eta) >= eta * &max_m;
    let tau_ok = *tau >= eta * &max_m && *tau <= (&one - eta) * &min_m;

    if !(eta_ok && comparable && tau_ok) {
        return Ok(KprgtStabilityReport {
            outcome: CheckOutcome::HypothesisNotMet,
            d_kprgt: None,
            sandwich_ok: false,
            gap_a,
            gap_b,
        });
    }

    let d_prime = deficit_kprgt(a, b, tau)?;
    let deficit_small = d_prime < sq(tau)
        && d_prime < sq(&(&min_m - tau))
        && &d_prime * k < sq(&sq(&sq(eta))) * sq(&max_m);
    if !deficit_small {
        return Ok(KprgtStabilityReport {
            outcome: CheckOutcome::HypothesisNotMet,
            d_kprgt: Some(d_prime),
            sandwich_ok: false,
            gap_a,
            gap_b,
        });
    }

    let s_measure = convolve_indicators(a, b).superlevel(tau).measure();
    let sandwich_ok = s_measure >= (&ma - &mb).abs() && s_measure <= &ma + &mb;
    let bound = sq(k) * &d_prime;
    let gaps_ok = sq(&gap_a) <= bound && sq(&gap_b) <= bound;
    Ok(KprgtStabilityReport {
        outcome: CheckOutcome::from_bool(sandwich_ok && gaps_ok),
        d_kprgt: Some(d_prime),
        sandwich_ok,
        gap_a,
        gap_b,
    })
}

/// One row of the sharpness experiment.
#[derive(Debug, Clone)]
pub struct ProbePoint {
    pub delta: Rational,
    /// Deficit of `(A, B, C_delta)`; `None` when the point is invalid.
    pub d_rs: Option<Rational>,
    /// `|C △ L|` for the best interval `L`; `None` when invalid.
    pub c_gap: Option<Rational>,
    /// Point satisfies the per-point regime conditions.
    pub valid: bool,
    /// `log2(D_k / D_{k+1}) / log2(delta_k / delta_{k+1})` against the next
    /// valid point.
    pub slope_to_next: Option<f64>,
}

/// Traces `C = [-gamma, gamma] ∪ [gamma + delta, gamma + 2 delta]` for each
/// `delta`, recording the exact deficit and best-interval gap. Points where
/// the triple leaves the sandwich regime or loses strict admissibility are
/// marked invalid rather than dropped.
pub fn sharpness_probe(
    gamma: &Rational,
    deltas: &[Rational],
    a: &IntervalUnion,
    b: &IntervalUnion,
) -> Result<Vec<ProbePoint>> {
    if !gamma.is_positive() {
        return Err(Error::BadParameter(format!("gamma must be positive, got {gamma}")));
    }
    let base = IntervalUnion::centered(&(rint(2) * gamma));
    let base_eta = admissibility_eta(a, b, &base)?;
    if !base_eta.is_positive() {
        return Err(Error::BadParameter(format!(
            "(A, B, [-{gamma}, {gamma}]) is not strictly admissible (eta = {base_eta})"
        )));
    }

    let (ma, mb) = (a.measure(), b.measure());
    let mut points: Vec<ProbePoint> = Vec::with_capacity(deltas.len());
    for delta in deltas {
        if !delta.is_positive() {
            points.push(ProbePoint {
                delta: delta.clone(),
                d_rs: None,
                c_gap: None,
                valid: false,
                slope_to_next: None,
            });
            continue;
        }
        let c = IntervalUnion::normalize(vec![
            (-gamma.clone(), gamma.clone()),
            (gamma + delta, gamma + rint(2) * delta),
        ])
        .expect("probe endpoints ordered");
        let mc = c.measure();
        let sandwich = mc >= (&ma - &mb).abs() && mc <= &ma + &mb;
        let eta = admissibility_eta(a, b, &c)?;
        if !(sandwich && eta.is_positive()) {
            points.push(ProbePoint {
                delta: delta.clone(),
                d_rs: None,
                c_gap: None,
                valid: false,
                slope_to_next: None,
            });
            continue;
        }
        let d = deficit_rs(a, b, &c)?;
        let gap = best_interval(&c).gap;
        points.push(ProbePoint {
            delta: delta.clone(),
            d_rs: Some(d),
            c_gap: Some(gap),
            valid: true,
            slope_to_next: None,
        });
    }

    for i in 0..points.len().saturating_sub(1) {
        let (head, tail) = points.split_at_mut(i + 1);
        let cur = &mut head[i];
        let next = &tail[0];
        if let (Some(d0), Some(d1)) = (&cur.d_rs, &next.d_rs) {
            if d0.is_positive() && d1.is_positive() && cur.delta != next.delta {
                let num = (d0 / d1).to_f64().map(f64::log2);
                let den = (&cur.delta / &next.delta).to_f64().map(f64::log2);
                if let (Some(n), Some(d)) = (num, den) {
                    if d != 0.0 {
                        cur.slope_to_next = Some(n / d);
                    }
                }
            }
        }
    }
    Ok(points)
}
