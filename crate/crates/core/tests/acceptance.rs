//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `-- --nocapture` to see them). Every tolerance is pinned
//! here; the exact checks carry zero tolerance.

use rslab_core::audit::{run_audit, AuditConfig, CheckKind};
use rslab_core::calibration::{frozen_c0, frozen_k, CORPUS_SEED, CORPUS_TRIALS};
use rslab_core::conv::{convolve_indicators, pairing, tail_integral, PiecewiseLinear};
use rslab_core::deficit::rearranged_pairing;
use rslab_core::interval::IntervalUnion;
use rslab_core::oracle::grid_oracle_pairing;
use rslab_core::random::{mix, random_set, random_set_with, Lcg};
use rslab_core::rational::{rat, rint, rmin, to_f64, Rational};
use rslab_core::stability::{best_interval, sharpness_probe};
use num_traits::{Signed, Zero};

fn corpus_config(checks: Vec<CheckKind>, trials: u64) -> AuditConfig {
    AuditConfig {
        trials,
        seed: CORPUS_SEED,
        checks,
        k_const: frozen_k(),
        c0: frozen_c0(),
        ..AuditConfig::default()
    }
}

fn assert_no_failures(report: &rslab_core::audit::AuditReport) {
    for row in report.failures() {
        panic!(
            "trial {} check {} failed: {}\nreproducer: {}",
            row.index,
            row.check.name(),
            row.detail,
            row.reproducer.as_deref().unwrap_or("-")
        );
    }
}

#[test]
fn acceptance_01_exact_identity_audit() {
    let cfg = corpus_config(
        vec![CheckKind::DeficitRs, CheckKind::DeficitKprgt, CheckKind::Identity],
        CORPUS_TRIALS,
    );
    let report = run_audit(&cfg);
    assert_no_failures(&report);
    for kind in &cfg.checks {
        let t = report.tally_for(*kind);
        assert_eq!(t.pass, CORPUS_TRIALS, "{} must pass every trial", kind.name());
    }
    println!(
        "criterion 01 (exact identity audit, {CORPUS_TRIALS} trials x 3 checks): PASS — \
         deficit_rs >= 0, deficit_kprgt >= 0, identity residual = 0, zero tolerance"
    );
}

#[test]
fn acceptance_02_closed_form_vs_engine() {
    let mut rng = Lcg::new(mix(CORPUS_SEED ^ 0x02));
    let trials = 1000;
    let mut seen = [0u64; 3];
    for i in 0..trials {
        let a = rint(1) + rng.fraction(64) * rint(3);
        let b = rint(1) + rng.fraction(64) * rint(3);
        let low = (&a - &b).abs();
        let high = &a + &b;
        let c = match i % 3 {
            0 => &low * rng.fraction_closed(64),
            1 => &low + (&high - &low) * rng.fraction_open(64),
            _ => &high * (rint(1) + rng.fraction_closed(64)),
        };
        seen[(i % 3) as usize] += 1;
        let closed = rearranged_pairing(&a, &b, &c).unwrap();
        let engine = pairing(
            &convolve_indicators(&IntervalUnion::centered(&a), &IntervalUnion::centered(&b)),
            &IntervalUnion::centered(&c),
        );
        assert_eq!(closed, engine, "mismatch at measures ({a}, {b}, {c})");
    }
    assert!(seen.iter().all(|&n| n > 0));
    println!(
        "criterion 02 (closed form vs engine, {trials} measure triples, all 3 regimes): PASS — exact equality"
    );
}

/// Independent clip-route oracle: refine the knot grid by the level
/// crossings, then integrate `max(f - tau, 0)` by the midpoint rule (exact
/// for affine pieces).
fn clip_integral_oracle(f: &PiecewiseLinear, tau: &Rational) -> Rational {
    let knots = f.knots();
    let values = f.values();
    let mut cuts: Vec<Rational> = knots.to_vec();
    for i in 1..knots.len() {
        let (v0, v1) = (&values[i - 1], &values[i]);
        if (v0 > tau) != (v1 > tau) && v0 != v1 {
            let t = (tau - v0) / (v1 - v0);
            if t.is_positive() && t < rint(1) {
                cuts.push(&knots[i - 1] + t * (&knots[i] - &knots[i - 1]));
            }
        }
    }
    cuts.sort();
    cuts.dedup();
    let mut total = Rational::zero();
    for w in cuts.windows(2) {
        let mid = (&w[0] + &w[1]) / rint(2);
        let excess = f.eval(&mid) - tau;
        if excess.is_positive() {
            total += (&w[1] - &w[0]) * excess;
        }
    }
    total
}

#[test]
fn acceptance_03_layer_cake_identity() {
    let mut rng = Lcg::new(mix(CORPUS_SEED ^ 0x03));
    let trials = 1000;
    for _ in 0..trials {
        let na = 1 + rng.below(8) as usize;
        let a = random_set_with(&mut rng, na, 64, &rint(4)).unwrap();
        let nb = 1 + rng.below(8) as usize;
        let b = random_set_with(&mut rng, nb, 64, &rint(4)).unwrap();
        let tau = rng.fraction_closed(64) * rmin(&a.measure(), &b.measure());
        let via_layer_cake = tail_integral(&a, &b, &tau);
        let via_clip = clip_integral_oracle(&convolve_indicators(&a, &b), &tau);
        assert_eq!(via_layer_cake, via_clip, "layer cake violated for tau={tau}");
    }
    println!(
        "criterion 03 (layer-cake identity, {trials} random (A,B,tau)): PASS — exact equality of both routes"
    );
}

#[test]
fn acceptance_04_superlevel_difference_inclusion() {
    let cfg = corpus_config(vec![CheckKind::Inclusion], CORPUS_TRIALS);
    let report = run_audit(&cfg);
    assert_no_failures(&report);
    let t = report.tally_for(CheckKind::Inclusion);
    assert_eq!(t.fail, 0);
    assert!(
        t.not_met_fraction() <= 0.5,
        "vacuous rate {:.3} exceeds 50%",
        t.not_met_fraction()
    );
    println!(
        "criterion 04 (difference inclusion, {CORPUS_TRIALS} trials): PASS — {} checked, {} vacuous ({:.1}%)",
        t.pass,
        t.hypothesis_not_met,
        100.0 * t.not_met_fraction()
    );
}

#[test]
fn acceptance_05_keystone() {
    let cfg = corpus_config(vec![CheckKind::Keystone], CORPUS_TRIALS);
    let report = run_audit(&cfg);
    assert_no_failures(&report);
    let t = report.tally_for(CheckKind::Keystone);
    assert_eq!(t.fail, 0);
    assert!(t.pass > 0);

    // equality subcase: single intervals attain diameter = |A+B| - |B|
    let mut rng = Lcg::new(mix(CORPUS_SEED ^ 0x05));
    for _ in 0..500 {
        let a = random_set_with(&mut rng, 1, 64, &rint(4)).unwrap();
        let b = random_set_with(&mut rng, 1, 64, &rint(4)).unwrap();
        let r = rslab_core::deficit::keystone_check(&a, &b).unwrap();
        assert_eq!(r.outcome, rslab_core::deficit::CheckOutcome::Pass);
        assert_eq!(r.diameter, r.bound, "interval pair must attain equality");
    }
    println!(
        "criterion 05 (keystone sumset bound, {CORPUS_TRIALS} trials): PASS — {} hypothesis-met, zero failures; \
         equality exact on 500 interval pairs",
        t.pass
    );
}

#[test]
fn acceptance_06_kemperman() {
    let cfg = corpus_config(vec![CheckKind::Kemperman], CORPUS_TRIALS);
    let report = run_audit(&cfg);
    assert_no_failures(&report);
    let t = report.tally_for(CheckKind::Kemperman);
    assert_eq!(t.pass, CORPUS_TRIALS);
    println!("criterion 06 (torus sumset bound, {CORPUS_TRIALS} trials): PASS — zero failures");
}

#[test]
fn acceptance_07_sharpness_law() {
    let a = IntervalUnion::centered(&rint(2)); // (-1, 1)
    let gamma = rat(1, 2);

    // the quadratic coefficient, cross-checked against the float grid
    // oracle at delta = 1/8 within 1e-3 before asserting exactness
    let delta0 = rat(1, 8);
    let c0 = IntervalUnion::normalize(vec![
        (-gamma.clone(), gamma.clone()),
        (&gamma + &delta0, &gamma + rint(2) * &delta0),
    ])
    .unwrap();
    let exact_pairing = pairing(&convolve_indicators(&a, &a), &c0);
    let grid = grid_oracle_pairing(&a, &a, &c0, 1 << 16);
    let rearranged = rearranged_pairing(&a.measure(), &a.measure(), &c0.measure()).unwrap();
    let d_grid = to_f64(&rearranged) - grid;
    assert!(
        (d_grid - 5.0 / 256.0).abs() < 1e-3,
        "grid-oracle deficit {d_grid} disagrees with 5/256"
    );
    assert_eq!(rearranged - exact_pairing, rat(5, 256));

    let deltas: Vec<Rational> = (3..=10).map(|k| rat(1, 1 << k)).collect();
    let points = sharpness_probe(&gamma, &deltas, &a, &a).unwrap();
    for pt in &points {
        assert!(pt.valid);
        let d = pt.d_rs.as_ref().unwrap();
        assert_eq!(d, &(rat(5, 4) * &pt.delta * &pt.delta), "law D = (5/4) d^2 at {}", pt.delta);
        assert_eq!(pt.c_gap.as_ref().unwrap(), &pt.delta, "gap = delta at {}", pt.delta);
    }
    for w in points.windows(2) {
        let ratio = w[0].d_rs.as_ref().unwrap() / w[1].d_rs.as_ref().unwrap();
        assert_eq!(ratio, rint(4), "deficit ratio must be exactly 4 per halving");
        assert_eq!(w[0].slope_to_next, Some(2.0));
    }
    // gap / sqrt(D) = 2 / sqrt(5): squared, gap^2 * 5 = 4 D
    for pt in &points {
        let gap = pt.c_gap.as_ref().unwrap();
        assert_eq!(gap * gap * rint(5), rint(4) * pt.d_rs.as_ref().unwrap());
    }
    println!(
        "criterion 07 (sharpness law, delta = 2^-3..2^-10): PASS — D = (5/4) delta^2 exactly, \
         |C△L| = delta exactly, slope exactly 2, gap/sqrt(D) = 2/sqrt(5)"
    );
}

#[test]
fn acceptance_08_truncation() {
    let cfg = corpus_config(vec![CheckKind::Truncation], CORPUS_TRIALS);
    let report = run_audit(&cfg);
    assert_no_failures(&report);
    let t = report.tally_for(CheckKind::Truncation);
    assert_eq!(t.fail, 0);

    // interval identity: for centered intervals and K inside the reduced
    // sandwich range, the truncated-and-rearranged pairing differs from the
    // original by exactly (eta + eta') |K|
    let mut rng = Lcg::new(mix(CORPUS_SEED ^ 0x08));
    let trials = 1000;
    for _ in 0..trials {
        let li = rint(1) + rng.fraction(64) * rint(2);
        let lj = rint(1) + rng.fraction(64) * rint(2);
        let min_l = rmin(&li, &lj);
        let eta = &min_l * rng.fraction(64) / rint(4);
        let eta_prime = &min_l * rng.fraction(64) / rint(4);
        let cut = &eta + &eta_prime;
        let lk = (&li + &lj - rint(2) * &cut) * rng.fraction_closed(64);
        if lk.is_zero() {
            continue;
        }
        let i_set = IntervalUnion::centered(&li);
        let j_set = IntervalUnion::centered(&lj);
        let k_set = IntervalUnion::centered(&lk);
        let lhs = pairing(&convolve_indicators(&i_set, &j_set), &k_set);
        let i_cut = i_set.truncate(&eta, &eta_prime).unwrap().rearrange();
        let j_cut = j_set.truncate(&eta_prime, &eta).unwrap().rearrange();
        let rhs = pairing(&convolve_indicators(&i_cut, &j_cut), &k_set) + &cut * k_set.measure();
        assert_eq!(lhs, rhs, "interval identity violated at ({li}, {lj}, {lk}, {eta}, {eta_prime})");
    }
    println!(
        "criterion 08 (truncation monotonicity, {CORPUS_TRIALS} trials): PASS — {} admissible configurations, \
         zero failures; interval identity exact on {trials} triples",
        t.pass
    );
}

#[test]
fn acceptance_09_superlevel_approximation_suite() {
    let trials = 1000;
    let cfg = corpus_config(vec![CheckKind::SuperlevelApprox], trials);
    let report = run_audit(&cfg);
    assert_no_failures(&report);
    let t = report.tally_for(CheckKind::SuperlevelApprox);
    assert_eq!(t.pass, trials, "all near-extremizers must satisfy the bounds");
    println!(
        "criterion 09 (superlevel approximation, {trials} near-extremizers): PASS — \
         symdiff^2 <= 16D, drift^2 <= 16D, deficit monotone; zero failures"
    );
}

#[test]
fn acceptance_10_best_interval_oracle_equivalence() {
    let mut rng = Lcg::new(mix(CORPUS_SEED ^ 0x0A));
    let trials = 2000;
    for _ in 0..trials {
        let n = 1 + rng.below(12) as usize;
        let a = random_set_with(&mut rng, n, 64, &rint(8)).unwrap();
        let fast = best_interval(&a);
        // O(n^2) oracle over all contiguous component hulls
        let comps = a.components();
        let mut brute: Option<Rational> = None;
        for i in 0..comps.len() {
            for j in i..comps.len() {
                let hull =
                    IntervalUnion::interval(comps[i].lo.clone(), comps[j].hi.clone()).unwrap();
                let gap = a.symmetric_difference(&hull).measure();
                brute = Some(match brute {
                    Some(b) if b <= gap => b,
                    _ => gap,
                });
            }
        }
        assert_eq!(fast.gap, brute.unwrap(), "gap mismatch on {a}");
        // the reported interval must attain the reported gap
        let hull = fast.interval.as_ref().unwrap();
        let attained = a
            .symmetric_difference(&IntervalUnion::interval(hull.lo.clone(), hull.hi.clone()).unwrap())
            .measure();
        assert_eq!(attained, fast.gap);
    }
    println!(
        "criterion 10 (best interval vs brute force, {trials} unions, <= 12 components): PASS — exact agreement"
    );
}

#[test]
fn acceptance_11_calibration_stability() {
    let cfg = corpus_config(
        vec![CheckKind::MainTheorem, CheckKind::KprgtStability],
        CORPUS_TRIALS,
    );
    let report = run_audit(&cfg);
    assert_no_failures(&report);
    let main = report.tally_for(CheckKind::MainTheorem);
    let kprgt = report.tally_for(CheckKind::KprgtStability);
    assert_eq!(main.fail, 0);
    assert_eq!(kprgt.fail, 0);
    assert!(main.not_met_fraction() < 0.70);
    assert!(kprgt.not_met_fraction() < 0.70);
    println!(
        "criterion 11 (calibration stability, K = {}, c0 = {}, seed {CORPUS_SEED}): PASS — zero FAILs; \
         hypothesis-not-met rates {:.1}% (main), {:.1}% (kprgt)",
        frozen_k(),
        frozen_c0(),
        100.0 * main.not_met_fraction(),
        100.0 * kprgt.not_met_fraction()
    );
}

#[test]
fn acceptance_12_grid_oracle_convergence() {
    let fixtures = 20;
    let mut max_rel_error: f64 = 0.0;
    let mut ratios: Vec<f64> = Vec::new();
    for i in 0..fixtures {
        let a = random_set(5000 + i, 1 + (i as usize % 4), 64, &rint(2)).unwrap();
        let b = random_set(6000 + i, 1 + ((i as usize + 1) % 4), 64, &rint(2)).unwrap();
        let c = random_set(7000 + i, 1 + ((i as usize + 2) % 4), 64, &rint(3)).unwrap();
        let exact = to_f64(&pairing(&convolve_indicators(&a, &b), &c));
        let scale = to_f64(&(a.measure() * b.measure()));
        let e1 = (grid_oracle_pairing(&a, &b, &c, 1 << 16) - exact).abs();
        let e2 = (grid_oracle_pairing(&a, &b, &c, 1 << 17) - exact).abs();
        assert!(
            e1 < 1e-3 * scale,
            "fixture {i}: error {e1} at n=2^16 exceeds 1e-3 * |A||B| = {}",
            1e-3 * scale
        );
        if e1 > 1e-12 * scale {
            ratios.push(e2 / e1);
        }
    }
    assert!(
        ratios.len() >= fixtures as usize / 2,
        "too few fixtures with measurable error ({})",
        ratios.len()
    );
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    assert!(
        (0.3..=0.7).contains(&mean),
        "mean error ratio {mean:.3} outside [0.3, 0.7]"
    );
    for e in &ratios {
        max_rel_error = max_rel_error.max(*e);
    }
    println!(
        "criterion 12 (grid oracle convergence, {fixtures} fixtures): PASS — \
         errors below 1e-3 |A||B| at n=2^16, mean halving ratio {mean:.3}"
    );
}
