//! Seeded randomized property suites.
//!
//! Each audit trial draws fresh inputs from a deterministic generator and
//! evaluates the configured checks; outcomes are tallied three ways (pass,
//! fail, hypothesis-not-met) so vacuous cases never count as evidence.
//! Trial `i` seeds its generator from `mix(seed + i)`, and each check kind
//! mixes in a fixed tag, so results are identical across thread counts and
//! across different check selections.

use crate::calibration;
use crate::conv::convolve_indicators;
use crate::deficit::{
    deficit_kprgt, deficit_rs, difference_inclusion_check, identity_check, kemperman_check,
    keystone_check, superlevel_approx_check, truncation_deficit_check, CheckOutcome,
};
use crate::interval::IntervalUnion;
use crate::random::{mix, random_set_with, Lcg};
use crate::rational::{rat, rint, rmax, rmin, sq, Rational};
use crate::stability::{verify_kprgt_stability, verify_main_theorem, verify_sharpened_rs};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

/// The individually selectable audit checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    DeficitRs,
    DeficitKprgt,
    Identity,
    Inclusion,
    Keystone,
    Kemperman,
    Truncation,
    SuperlevelApprox,
    MainTheorem,
    KprgtStability,
}

impl CheckKind {
    pub const ALL: [CheckKind; 10] = [
        CheckKind::DeficitRs,
        CheckKind::DeficitKprgt,
        CheckKind::Identity,
        CheckKind::Inclusion,
        CheckKind::Keystone,
        CheckKind::Kemperman,
        CheckKind::Truncation,
        CheckKind::SuperlevelApprox,
        CheckKind::MainTheorem,
        CheckKind::KprgtStability,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::DeficitRs => "deficit_rs",
            CheckKind::DeficitKprgt => "deficit_kprgt",
            CheckKind::Identity => "identity",
            CheckKind::Inclusion => "inclusion",
            CheckKind::Keystone => "keystone",
            CheckKind::Kemperman => "kemperman",
            CheckKind::Truncation => "truncation",
            CheckKind::SuperlevelApprox => "superlevel_approx",
            CheckKind::MainTheorem => "main_theorem",
            CheckKind::KprgtStability => "kprgt_stability",
        }
    }

    pub fn parse(s: &str) -> Option<CheckKind> {
        Self::ALL.iter().copied().find(|k| k.name() == s)
    }

    fn tag(&self) -> u64 {
        Self::ALL.iter().position(|k| k == self).unwrap() as u64 + 1
    }
}

/// Audit parameters: trial count, seed, generator bounds, check list, and
/// the frozen constants.
#[derive(Debug, Clone)]
pub struct AuditConfig {
    pub trials: u64,
    pub seed: u64,
    pub max_components: usize,
    pub denom_bound: u64,
    pub range: Rational,
    pub checks: Vec<CheckKind>,
    pub k_const: Rational,
    pub c0: Rational,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            trials: 1000,
            seed: calibration::CORPUS_SEED,
            max_components: 8,
            denom_bound: 64,
            range: rint(4),
            checks: CheckKind::ALL.to_vec(),
            k_const: calibration::frozen_k(),
            c0: calibration::frozen_c0(),
        }
    }
}

/// One evaluated check on one trial.
#[derive(Debug, Clone)]
pub struct TrialResult {
    pub index: u64,
    pub check: CheckKind,
    pub outcome: CheckOutcome,
    pub detail: String,
    /// A standalone reproducer document, present on failures.
    pub reproducer: Option<String>,
}

/// Per-check outcome counts.
#[derive(Debug, Clone, Copy, Default)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub hypothesis_not_met: u64,
}

impl Tally {
    pub fn total(&self) -> u64 {
        self.pass + self.fail + self.hypothesis_not_met
    }

    pub fn not_met_fraction(&self) -> f64 {
        if self.total() == 0 {
            0.0
        } else {
            self.hypothesis_not_met as f64 / self.total() as f64
        }
    }

    fn add(&mut self, outcome: CheckOutcome) {
        match outcome {
            CheckOutcome::Pass => self.pass += 1,
            CheckOutcome::Fail => self.fail += 1,
            CheckOutcome::HypothesisNotMet => self.hypothesis_not_met += 1,
        }
    }
}

/// Extreme dimensionless ratios observed across the corpus, for freezing
/// the stability constants.
#[derive(Debug, Clone, Default)]
pub struct CalibrationStats {
    /// max over trials of `(gap_max * eta)^2 / D`.
    pub max_gap_ratio_sq: Option<Rational>,
    /// max over trials of `(|a+b-c| * eta^2)^4 / (D * max^2)`.
    pub max_center_ratio_pow4: Option<Rational>,
    /// min over trials of `D / (eta^2 gap_A^2)` with a positive gap.
    pub min_sharpened_ratio: Option<Rational>,
    /// max over trials of `gap^2 / D'` with a positive deficit.
    pub max_kprgt_ratio_sq: Option<Rational>,
}

impl CalibrationStats {
    fn fold_max(slot: &mut Option<Rational>, value: Rational) {
        match slot {
            Some(current) if *current >= value => {}
            _ => *slot = Some(value),
        }
    }

    fn fold_min(slot: &mut Option<Rational>, value: Rational) {
        match slot {
            Some(current) if *current <= value => {}
            _ => *slot = Some(value),
        }
    }

    fn merge(&mut self, other: &CalibrationStats) {
        if let Some(v) = &other.max_gap_ratio_sq {
            Self::fold_max(&mut self.max_gap_ratio_sq, v.clone());
        }
        if let Some(v) = &other.max_center_ratio_pow4 {
            Self::fold_max(&mut self.max_center_ratio_pow4, v.clone());
        }
        if let Some(v) = &other.min_sharpened_ratio {
            Self::fold_min(&mut self.min_sharpened_ratio, v.clone());
        }
        if let Some(v) = &other.max_kprgt_ratio_sq {
            Self::fold_max(&mut self.max_kprgt_ratio_sq, v.clone());
        }
    }
}

/// Full audit output: ordered rows, per-check tallies, and calibration
/// extremes.
#[derive(Debug, Clone)]
pub struct AuditReport {
    pub rows: Vec<TrialResult>,
    pub tallies: Vec<(CheckKind, Tally)>,
    pub stats: CalibrationStats,
}

impl AuditReport {
    pub fn failures(&self) -> impl Iterator<Item = &TrialResult> {
        self.rows.iter().filter(|r| r.outcome.is_fail())
    }

    pub fn any_failure(&self) -> bool {
        self.rows.iter().any(|r| r.outcome.is_fail())
    }

    pub fn tally_for(&self, kind: CheckKind) -> Tally {
        self.tallies
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|(_, t)| *t)
            .unwrap_or_default()
    }
}

/// Runs the configured checks over `trials` independently seeded trials.
/// Trials evaluate in parallel; output order is by trial index.
pub fn run_audit(cfg: &AuditConfig) -> AuditReport {
    let per_trial: Vec<(Vec<TrialResult>, CalibrationStats)> = (0..cfg.trials)
        .into_par_iter()
        .map(|index| run_trial(cfg, index))
        .collect();

    let mut rows = Vec::with_capacity(cfg.trials as usize * cfg.checks.len());
    let mut stats = CalibrationStats::default();
    for (trial_rows, trial_stats) in per_trial {
        rows.extend(trial_rows);
        stats.merge(&trial_stats);
    }
    let mut tallies: Vec<(CheckKind, Tally)> = cfg
        .checks
        .iter()
        .map(|k| (*k, Tally::default()))
        .collect();
    for row in &rows {
        if let Some((_, t)) = tallies.iter_mut().find(|(k, _)| *k == row.check) {
            t.add(row.outcome);
        }
    }
    AuditReport { rows, tallies, stats }
}

fn run_trial(cfg: &AuditConfig, index: u64) -> (Vec<TrialResult>, CalibrationStats) {
    let trial_seed = mix(cfg.seed.wrapping_add(index));
    let mut rows = Vec::with_capacity(cfg.checks.len());
    let mut stats = CalibrationStats::default();
    for kind in &cfg.checks {
        let mut rng = Lcg::new(mix(trial_seed ^ (kind.tag() << 32)));
        let (outcome, detail, reproducer) = evaluate(cfg, *kind, &mut rng, &mut stats);
        rows.push(TrialResult {
            index,
            check: *kind,
            outcome,
            detail,
            reproducer,
        });
    }
    (rows, stats)
}

/// Formats a reproducer document in the CLI's set-document syntax.
fn set_doc(sets: &[(&str, &IntervalUnion)], params: &[(&str, &Rational)]) -> String {
    let mut out = String::from("{\"sets\": {");
    for (i, (name, set)) in sets.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&format!("\"{name}\": ["));
        for (j, c) in set.components().iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(&format!("[\"{}\", \"{}\"]", c.lo, c.hi));
        }
        out.push(']');
    }
    out.push_str("}, \"params\": {");
    for (i, (name, value)) in params.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&format!("\"{name}\": \"{value}\""));
    }
    out.push_str("}}");
    out
}

fn gen_union(rng: &mut Lcg, cfg: &AuditConfig, max_components: usize) -> IntervalUnion {
    let n = 1 + rng.below(max_components.max(1) as u64) as usize;
    random_set_with(rng, n, cfg.denom_bound, &cfg.range)
        .expect("generator bounds are valid")
}

/// Interval of length `len` centered at `center`.
fn centered_interval(center: &Rational, len: &Rational) -> IntervalUnion {
    let half = len / rint(2);
    IntervalUnion::interval(center - &half, center + &half).expect("positive length")
}

/// Removes up to `max_notches` interior slivers with total measure at most
/// `budget` from a set.
fn notch(set: &IntervalUnion, rng: &mut Lcg, budget: &Rational, max_notches: u64) -> IntervalUnion {
    if !budget.is_positive() || set.is_empty() {
        return set.clone();
    }
    let notches = rng.below(max_notches + 1);
    if notches == 0 {
        return set.clone();
    }
    let hull = set.hull().unwrap();
    let span = hull.length();
    let mut result = set.clone();
    let per = budget / rint(notches as i64);
    for _ in 0..notches {
        let width = &per * rng.fraction_open(16);
        let offset = &span * rng.fraction_open(64);
        let lo = &hull.lo + offset;
        let hi = rmin(&(&lo + &width), &hull.hi);
        if hi > lo {
            let cut = IntervalUnion::interval(lo, hi).unwrap();
            let next = result.difference(&cut);
            if !next.is_empty() {
                result = next;
            }
        }
    }
    result
}

fn evaluate(
    cfg: &AuditConfig,
    kind: CheckKind,
    rng: &mut Lcg,
    stats: &mut CalibrationStats,
) -> (CheckOutcome, String, Option<String>) {
    match kind {
        CheckKind::DeficitRs => {
            let a = gen_union(rng, cfg, cfg.max_components);
            let b = gen_union(rng, cfg, cfg.max_components);
            let c = gen_union(rng, cfg, cfg.max_components);
            let d = deficit_rs(&a, &b, &c).expect("nonempty inputs");
            let ok = !d.is_negative();
            let repro = (!ok).then(|| set_doc(&[("A", &a), ("B", &b), ("C", &c)], &[]));
            (CheckOutcome::from_bool(ok), format!("d_rs={d}"), repro)
        }
        CheckKind::DeficitKprgt => {
            let a = gen_union(rng, cfg, cfg.max_components);
            let b = gen_union(rng, cfg, cfg.max_components);
            let tau = rng.fraction_closed(cfg.denom_bound) * rmin(&a.measure(), &b.measure());
            let d = deficit_kprgt(&a, &b, &tau).expect("tau in range");
            let ok = !d.is_negative();
            let repro = (!ok).then(|| set_doc(&[("A", &a), ("B", &b)], &[("tau", &tau)]));
            (CheckOutcome::from_bool(ok), format!("d_kprgt={d}"), repro)
        }
        CheckKind::Identity => {
            let a = gen_union(rng, cfg, cfg.max_components);
            let b = gen_union(rng, cfg, cfg.max_components);
            let tau = rng.fraction_closed(cfg.denom_bound) * rmin(&a.measure(), &b.measure());
            let report = identity_check(&a, &b, &tau).expect("tau in range");
            let ok = report.residual.is_zero();
            let repro = (!ok).then(|| set_doc(&[("A", &a), ("B", &b)], &[("tau", &tau)]));
            (
                CheckOutcome::from_bool(ok),
                format!("regime={} residual={}", report.regime, report.residual),
                repro,
            )
        }
        CheckKind::Inclusion => {
            // keep half the pairs compact so the target level is often
            // nonnegative (vacuous rate stays under control)
            let compact = rng.coin();
            let u = gen_union(rng, cfg, if compact { 2 } else { cfg.max_components });
            let v = gen_union(rng, cfg, if compact { 2 } else { cfg.max_components });
            let sup = convolve_indicators(&u, &v).sup();
            let alpha1 = &sup * (rat(1, 2) + rat(1, 2) * rng.fraction_open(cfg.denom_bound));
            let alpha2 = &sup * (rat(1, 2) + rat(1, 2) * rng.fraction_open(cfg.denom_bound));
            let report = difference_inclusion_check(&u, &v, &alpha1, &alpha2)
                .expect("positive levels");
            let outcome = if report.vacuous {
                CheckOutcome::HypothesisNotMet
            } else {
                report.outcome
            };
            let repro = outcome.is_fail().then(|| {
                set_doc(&[("A", &u), ("B", &v)], &[("alpha1", &alpha1), ("alpha2", &alpha2)])
            });
            (outcome, format!("uncovered={}", report.uncovered), repro)
        }
        CheckKind::Keystone => {
            // half the pairs are near-intervals so the sumset hypothesis is
            // regularly satisfied
            let (a, b) = if rng.coin() {
                let la = rint(1) + rng.fraction(cfg.denom_bound) * &cfg.range;
                let lb = rint(1) + rng.fraction(cfg.denom_bound) * &cfg.range;
                let ca = &cfg.range * rng.fraction_closed(cfg.denom_bound) - &cfg.range / rint(2);
                let cb = &cfg.range * rng.fraction_closed(cfg.denom_bound) - &cfg.range / rint(2);
                let budget_a = &la / rint(8);
                let budget_b = &lb / rint(8);
                (
                    notch(&centered_interval(&ca, &la), rng, &budget_a, 2),
                    notch(&centered_interval(&cb, &lb), rng, &budget_b, 2),
                )
            } else {
                (
                    gen_union(rng, cfg, cfg.max_components),
                    gen_union(rng, cfg, cfg.max_components),
                )
            };
            let report = keystone_check(&a, &b).expect("nonempty inputs");
            let repro = report
                .outcome
                .is_fail()
                .then(|| set_doc(&[("A", &a), ("B", &b)], &[]));
            (
                report.outcome,
                format!("diameter={} bound={}", report.diameter, report.bound),
                repro,
            )
        }
        CheckKind::Kemperman => {
            let a = gen_union(rng, cfg, cfg.max_components);
            let b = gen_union(rng, cfg, cfg.max_components);
            let report = kemperman_check(&a, &b).expect("nonempty inputs");
            let repro = report
                .outcome
                .is_fail()
                .then(|| set_doc(&[("A", &a), ("B", &b)], &[]));
            (
                report.outcome,
                format!("sum={} bound={}", report.sum_measure, report.bound),
                repro,
            )
        }
        CheckKind::Truncation => {
            let a = gen_union(rng, cfg, cfg.max_components);
            let b = gen_union(rng, cfg, cfg.max_components);
            let bound = a.measure() + b.measure();
            let mut c = gen_union(rng, cfg, cfg.max_components);
            let mut attempts = 0;
            while c.measure() > bound && attempts < 4 {
                c = gen_union(rng, cfg, cfg.max_components);
                attempts += 1;
            }
            if c.measure() > bound {
                return (
                    CheckOutcome::HypothesisNotMet,
                    "no admissible C drawn".into(),
                    None,
                );
            }
            let half_min = rmin(&a.measure(), &b.measure()) / rint(2);
            let eta = &half_min * rng.fraction(cfg.denom_bound);
            let eta_prime = &half_min * rng.fraction(cfg.denom_bound);
            let report = truncation_deficit_check(&a, &b, &c, &eta, &eta_prime)
                .expect("parameters in range");
            let repro = report.outcome.is_fail().then(|| {
                set_doc(
                    &[("A", &a), ("B", &b), ("C", &c)],
                    &[("eta", &eta), ("eta_prime", &eta_prime)],
                )
            });
            (
                report.outcome,
                format!(
                    "base={} truncated={} pointwise_ok={}",
                    report.base_deficit, report.truncated_deficit, report.pointwise_ok
                ),
                repro,
            )
        }
        CheckKind::SuperlevelApprox => {
            let (a, b, e) = near_extremizer_triple(rng, cfg, NotchScale::Moderate, true);
            let report = superlevel_approx_check(&a, &b, &e).expect("nonempty inputs");
            let repro = report
                .outcome
                .is_fail()
                .then(|| set_doc(&[("A", &a), ("B", &b), ("C", &e)], &[]));
            (
                report.outcome,
                format!("d={} symdiff={}", report.deficit, report.symdiff),
                repro,
            )
        }
        CheckKind::MainTheorem => {
            let (a, b, c) = near_extremizer_triple(rng, cfg, NotchScale::Fine, false);
            let main = verify_main_theorem(&a, &b, &c, &cfg.k_const).expect("nonempty inputs");
            let sharpened = verify_sharpened_rs(&a, &b, &c, &cfg.c0).expect("nonempty inputs");
            let Some(report) = main else {
                return (CheckOutcome::HypothesisNotMet, "not strictly admissible".into(), None);
            };
            if let Some(ratio) = &sharpened.best_passing_c0 {
                CalibrationStats::fold_min(&mut stats.min_sharpened_ratio, ratio.clone());
            }
            if !report.hypothesis_met {
                return (
                    CheckOutcome::HypothesisNotMet,
                    format!("epsilon={} exceeds eta^4/K", report.epsilon),
                    None,
                );
            }
            if report.d_rs.is_positive() {
                let gap_ratio_sq = sq(&(report.max_gap() * &report.eta)) / &report.d_rs;
                CalibrationStats::fold_max(&mut stats.max_gap_ratio_sq, gap_ratio_sq);
                let center_pow4 = sq(&sq(&(&report.center_discrepancy * sq(&report.eta))))
                    / (&report.d_rs * sq(&report.max_measure));
                CalibrationStats::fold_max(&mut stats.max_center_ratio_pow4, center_pow4);
            }
            let ok = report.gap_bound_ok(&cfg.k_const)
                && report.center_bound_ok(&cfg.k_const)
                && !sharpened.outcome.is_fail();
            let repro = (!ok).then(|| set_doc(&[("A", &a), ("B", &b), ("C", &c)], &[]));
            (
                CheckOutcome::from_bool(ok),
                format!(
                    "epsilon={} ratio_gap={:.4} ratio_center={:.4}",
                    report.epsilon, report.ratio_gap, report.ratio_center
                ),
                repro,
            )
        }
        CheckKind::KprgtStability => {
            let eta = if rng.coin() { rat(1, 4) } else { rat(1, 8) };
            let one = rint(1);
            let big_len = rint(1) + rng.fraction(cfg.denom_bound);
            let floor = &eta / (&one - &eta);
            let min_len = &big_len * (&floor + (&one - &floor) * rng.fraction_closed(cfg.denom_bound));
            let ca = &cfg.range * rng.fraction_closed(cfg.denom_bound) - &cfg.range / rint(2);
            let cb = &cfg.range * rng.fraction_closed(cfg.denom_bound) - &cfg.range / rint(2);
            // notches must keep D' under the eta^8 threshold
            let budget = &big_len * sq(&sq(&sq(&eta))) / rint(1 << 10);
            let a = notch(&centered_interval(&ca, &big_len), rng, &budget, 1);
            let b = notch(&centered_interval(&cb, &min_len), rng, &budget, 1);
            let lo = &eta * rmax(&a.measure(), &b.measure());
            let hi = (&one - &eta) * rmin(&a.measure(), &b.measure());
            if lo > hi {
                return (CheckOutcome::HypothesisNotMet, "empty level window".into(), None);
            }
            let tau = &lo + (&hi - &lo) * rng.fraction_closed(cfg.denom_bound);
            let report = verify_kprgt_stability(&a, &b, &tau, &eta, &cfg.k_const)
                .expect("nonempty inputs");
            if let Some(d) = &report.d_kprgt {
                if d.is_positive() {
                    let worst = rmax(&report.gap_a, &report.gap_b);
                    CalibrationStats::fold_max(&mut stats.max_kprgt_ratio_sq, sq(&worst) / d);
                }
            }
            let repro = report.outcome.is_fail().then(|| {
                set_doc(&[("A", &a), ("B", &b)], &[("tau", &tau), ("eta", &eta)])
            });
            let detail = match &report.d_kprgt {
                Some(d) => format!("d_kprgt={} sandwich_ok={}", d, report.sandwich_ok),
                None => "hypotheses not met".into(),
            };
            (report.outcome, detail, repro)
        }
    }
}

/// How aggressively the near-extremizer generator may notch its sets.
#[derive(Debug, Clone, Copy)]
enum NotchScale {
    /// Notches up to a few percent of the scale (superlevel approximation).
    Moderate,
    /// Tiny notches keeping the deficit under the `eta^4` gate
    /// (main-theorem stability).
    Fine,
}

/// Appends a detached sliver of width `w` one gap-width past the right end.
fn attach_sliver(set: &IntervalUnion, w: &Rational) -> IntervalUnion {
    let hull = set.hull().expect("nonempty");
    IntervalUnion::normalize(vec![
        (hull.lo.clone(), hull.hi.clone()),
        (&hull.hi + w, &hull.hi + rint(2) * w),
    ])
    .expect("ordered endpoints")
}

/// Draws a triple of perturbed intervals whose measures are strictly
/// admissible and whose centers are nearly aligned, so the deficit is small
/// but generically nonzero. With `wide_third`, the third measure is placed
/// strictly inside the sandwich range with room for the approximation
/// hypotheses. At the fine scale, some trials replace interior notches with
/// a detached sliver (on the first or third set), the configuration whose
/// deficit is quadratic in the perturbation.
fn near_extremizer_triple(
    rng: &mut Lcg,
    cfg: &AuditConfig,
    scale: NotchScale,
    wide_third: bool,
) -> (IntervalUnion, IntervalUnion, IntervalUnion) {
    let la = rint(1) + rng.fraction(cfg.denom_bound);
    let lb = rint(1) + rng.fraction(cfg.denom_bound);
    let low = (&la - &lb).abs();
    let high = &la + &lb;
    let frac = if wide_third {
        // middle of the sandwich range
        rat(2, 5) + rat(1, 5) * rng.fraction_closed(cfg.denom_bound)
    } else {
        rat(1, 4) + rat(1, 2) * rng.fraction_closed(cfg.denom_bound)
    };
    let lc = &low + (&high - &low) * frac;

    let ca = &cfg.range * rng.fraction_closed(cfg.denom_bound) - &cfg.range / rint(2);
    let cb = &cfg.range * rng.fraction_closed(cfg.denom_bound) - &cfg.range / rint(2);
    let max_len = rmax(&rmax(&la, &lb), &lc);
    let (budget, jitter) = match scale {
        NotchScale::Moderate => {
            let b = rmin(&(rmin(&la, &lb) / rint(24)), &(&max_len / rint(24)));
            (b.clone(), b / rint(4))
        }
        NotchScale::Fine => {
            let b = &max_len * rat(1, 1 << 15);
            (b.clone(), b / rint(2))
        }
    };
    let offset = &jitter * (rng.fraction_closed(cfg.denom_bound) * rint(2) - rint(1));
    let cc = &ca + &cb + offset;

    let sliver_variant = match scale {
        NotchScale::Fine => rng.below(3),
        NotchScale::Moderate => 0,
    };
    let sliver_width = &max_len * rat(1, 128) * rng.fraction_open(cfg.denom_bound);

    let a = if sliver_variant == 1 {
        attach_sliver(&centered_interval(&ca, &la), &sliver_width)
    } else {
        notch(&centered_interval(&ca, &la), rng, &budget, 2)
    };
    let b = notch(&centered_interval(&cb, &lb), rng, &budget, 2);
    let c = if sliver_variant == 2 {
        attach_sliver(&centered_interval(&cc, &lc), &sliver_width)
    } else {
        notch(&centered_interval(&cc, &lc), rng, &budget, 2)
    };
    (a, b, c)
}
