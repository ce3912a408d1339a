//! Re-derives the frozen stability constants: runs the seeded corpus and
//! prints the extreme dimensionless ratios together with per-check tallies.
//!
//!     cargo run --release -p rslab-core --example calibrate -- 10000

use rslab_core::audit::{run_audit, AuditConfig, CheckKind};
use rslab_core::rational::to_f64;
use std::time::Instant;

fn main() {
    let trials: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(rslab_core::calibration::CORPUS_TRIALS);
    let cfg = AuditConfig {
        trials,
        checks: vec![
            CheckKind::MainTheorem,
            CheckKind::KprgtStability,
            CheckKind::SuperlevelApprox,
            CheckKind::Inclusion,
            CheckKind::Keystone,
            CheckKind::Truncation,
        ],
        ..AuditConfig::default()
    };
    let t0 = Instant::now();
    let report = run_audit(&cfg);
    println!(
        "elapsed: {:?} for {} trials (seed {})",
        t0.elapsed(),
        trials,
        cfg.seed
    );
    for (kind, tally) in &report.tallies {
        println!(
            "{:<18} pass={:<6} fail={:<4} hnm={:<6} hnm_rate={:.3}",
            kind.name(),
            tally.pass,
            tally.fail,
            tally.hypothesis_not_met,
            tally.not_met_fraction()
        );
    }
    let s = &report.stats;
    if let Some(v) = &s.max_gap_ratio_sq {
        println!("max gap ratio      = {:.6}", to_f64(v).sqrt());
    }
    if let Some(v) = &s.max_center_ratio_pow4 {
        println!("max center ratio   = {:.6}", to_f64(v).powf(0.25));
    }
    if let Some(v) = &s.min_sharpened_ratio {
        println!("min sharpened c0   = {:.6}", to_f64(v));
    }
    if let Some(v) = &s.max_kprgt_ratio_sq {
        println!("max kprgt ratio    = {:.6}", to_f64(v).sqrt());
    }
}
