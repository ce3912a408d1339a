//! `rslab`: exact evaluation, randomized audits, and sharpness probes for
//! interval-union convolution functionals.
//!
//! Exit codes: 0 — evaluation done / all checks passed; 1 — at least one
//! FAIL; 2 — input or usage error.

mod document;
mod output;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use document::{document_to_value, parse_document, SetDocument};
use num_traits::ToPrimitive;
use output::{emit, FieldReport, Format, RowReport};
use rslab_core::audit::{run_audit, AuditConfig, CheckKind};
use rslab_core::calibration;
use rslab_core::conv::{convolve_indicators, pairing};
use rslab_core::deficit::{
    deficit_report, difference_inclusion_check, equal_measure_case_check, identity_check,
    kemperman_check, keystone_check, superlevel_approx_check, truncation_deficit_check,
    CheckOutcome,
};
use rslab_core::interval::IntervalUnion;
use rslab_core::rational::{parse_rational, rint, to_f64, Rational};
use rslab_core::stability::{
    best_interval, sharpness_probe, verify_kprgt_stability, verify_main_theorem,
    verify_sharpened_rs,
};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "rslab",
    version,
    about = "Exact rational calculus for interval unions: convolution pairings, \
             rearrangement deficits, stability audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate pairings and deficits for the sets in a document
    Eval(EvalArgs),
    /// Run the seeded randomized property suite
    Audit(AuditArgs),
    /// Trace the two-interval sharpness family over a list of notch widths
    Probe(ProbeArgs),
    /// Best-interval approximation for every set in a document
    Approx(ApproxArgs),
    /// Run one named check on the sets in a document
    Check(CheckArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Output format: table, json, or csv
    #[arg(long, default_value = "table")]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Set document (JSON) with sets A, B, C and optional param tau
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
#[command(after_help = "CSV columns: trial, check, outcome, detail. \
Per-check pass/fail/hypothesis-not-met counts go to stderr in csv mode.")]
struct AuditArgs {
    /// Number of randomized trials
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    /// Corpus seed
    #[arg(long, default_value_t = calibration::CORPUS_SEED)]
    seed: u64,
    /// Comma-separated list of checks (default: all)
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Maximum components per generated set
    #[arg(long, default_value_t = 8)]
    components: usize,
    /// Endpoint lattice denominator
    #[arg(long = "denom-bound", default_value_t = 64)]
    denom_bound: u64,
    /// Half-width of the generation window
    #[arg(long, default_value = "4")]
    range: String,
    /// Stability constant K
    #[arg(long = "K")]
    k_const: Option<String>,
    /// Sharpened-inequality constant c0
    #[arg(long = "c0")]
    c0: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
#[command(after_help = "CSV columns: delta, delta_float, d_rs, d_rs_float, \
c_gap, c_gap_float, d_over_delta_sq, slope, valid.")]
struct ProbeArgs {
    /// Half-width of the base interval of the probe family
    #[arg(long)]
    gamma: String,
    /// Comma-separated notch widths
    #[arg(long, value_delimiter = ',', required = true)]
    deltas: Vec<String>,
    /// Optional document providing sets A and B (default: both (-1, 1))
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ApproxArgs {
    /// Set document (JSON)
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
#[command(after_help = "Required document entries per lemma:\n\
  identity           sets A, B; param tau\n\
  inclusion          sets A, B; params alpha1, alpha2\n\
  keystone           sets A, B\n\
  kemperman          sets A, B\n\
  truncation         sets A, B, C; params eta, eta_prime\n\
  superlevel_approx  sets A, B, E (or C)\n\
  equal_measure      sets A, B, C\n\
  main_theorem       sets A, B, C (uses --K)\n\
  sharpened_rs       sets A, B, C (uses --c0)\n\
  kprgt_stability    sets A, B; params tau, eta (uses --K)")]
struct CheckArgs {
    /// Which check to run: identity, inclusion, keystone, kemperman,
    /// truncation, superlevel_approx, equal_measure, main_theorem,
    /// sharpened_rs, or kprgt_stability
    #[arg(long)]
    lemma: String,
    /// Set document (JSON) with the sets and params the check needs
    #[arg(long)]
    input: PathBuf,
    /// Stability constant K
    #[arg(long = "K")]
    k_const: Option<String>,
    /// Sharpened-inequality constant c0
    #[arg(long = "c0")]
    c0: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

fn main() {
    let cli = Cli::parse();
    let exit = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(exit);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Audit(args) => cmd_audit(args),
        Command::Probe(args) => cmd_probe(args),
        Command::Approx(args) => cmd_approx(args),
        Command::Check(args) => cmd_check(args),
    }
}

fn rational_flag(value: &Option<String>, name: &str, default: Rational) -> Result<Rational> {
    match value {
        Some(s) => parse_rational(s).ok_or_else(|| anyhow!("--{name}: cannot parse \"{s}\" as p/q")),
        None => Ok(default),
    }
}

fn load_document(path: &PathBuf) -> Result<SetDocument> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    parse_document(&text)
}

fn exact_field(name: &str, value: &Rational) -> (String, String, Option<f64>) {
    (name.to_string(), value.to_string(), Some(to_f64(value)))
}

fn cmd_eval(args: EvalArgs) -> Result<i32> {
    let doc = load_document(&args.input)?;
    let a = doc.require_set("A")?;
    let b = doc.require_set("B")?;
    let c = doc.require_set("C")?;
    let tau = doc.params.get("tau");

    let report = deficit_report(a, b, c, tau)?;
    let pair = pairing(&convolve_indicators(a, b), c);
    let rearranged = rslab_core::deficit::rearranged_pairing(&a.measure(), &b.measure(), &c.measure())?;

    let mut fields = vec![
        exact_field("measure_a", &a.measure()),
        exact_field("measure_b", &b.measure()),
        exact_field("measure_c", &c.measure()),
        exact_field("eta_max", &report.eta_max),
        exact_field("pairing", &pair),
        exact_field("rearranged", &rearranged),
        exact_field("d_rs", &report.d_rs),
        exact_field("tau", &report.tau),
        exact_field("sigma", &report.sigma),
        ("regime".into(), report.regime.to_string(), None),
    ];
    if let Some(dk) = &report.d_kprgt {
        fields.push(exact_field("d_kprgt", dk));
    }
    let out = FieldReport {
        title: "evaluation".into(),
        status: None,
        fields,
        document: Some(document_to_value(&doc)),
    };
    emit(&out.render(args.common.format), &args.common.out)?;
    Ok(0)
}

fn parse_checks(names: &[String]) -> Result<Vec<CheckKind>> {
    if names.is_empty() {
        return Ok(CheckKind::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| {
            CheckKind::parse(n).ok_or_else(|| {
                anyhow!(
                    "unknown check \"{n}\" (expected one of: {})",
                    CheckKind::ALL.map(|k| k.name()).join(", ")
                )
            })
        })
        .collect()
}

fn cmd_audit(args: AuditArgs) -> Result<i32> {
    let checks = parse_checks(&args.checks)?;
    if args.trials == 0 {
        bail!("--trials must be at least 1");
    }
    let range = parse_rational(&args.range)
        .ok_or_else(|| anyhow!("--range: cannot parse \"{}\" as p/q", args.range))?;
    if !num_traits::Signed::is_positive(&range) {
        bail!("--range must be positive, got {range}");
    }
    if args.components == 0 {
        bail!("--components must be at least 1");
    }
    if args.denom_bound == 0 {
        bail!("--denom-bound must be at least 1");
    }
    let cfg = AuditConfig {
        trials: args.trials,
        seed: args.seed,
        max_components: args.components,
        denom_bound: args.denom_bound,
        range,
        checks,
        k_const: rational_flag(&args.k_const, "K", calibration::frozen_k())?,
        c0: rational_flag(&args.c0, "c0", calibration::frozen_c0())?,
    };
    let report = run_audit(&cfg);

    for failure in report.failures() {
        eprintln!(
            "FAIL trial {} check {}: {}\nreproducer: {}",
            failure.index,
            failure.check.name(),
            failure.detail,
            failure.reproducer.as_deref().unwrap_or("-")
        );
    }

    let text = match args.common.format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    vec![
                        r.index.to_string(),
                        r.check.name().to_string(),
                        r.outcome.to_string(),
                        r.detail.replace(',', ";"),
                    ]
                })
                .collect();
            for (kind, tally) in &report.tallies {
                eprintln!(
                    "{}: pass={} fail={} hypothesis-not-met={}",
                    kind.name(),
                    tally.pass,
                    tally.fail,
                    tally.hypothesis_not_met
                );
            }
            RowReport {
                title: String::new(),
                columns: vec!["trial".into(), "check".into(), "outcome".into(), "detail".into()],
                rows,
            }
            .render(Format::Csv)
        }
        format => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            for (kind, tally) in &report.tallies {
                rows.push(vec![
                    kind.name().to_string(),
                    tally.pass.to_string(),
                    tally.fail.to_string(),
                    tally.hypothesis_not_met.to_string(),
                ]);
            }
            let mut text = RowReport {
                title: format!(
                    "audit: {} trials, seed {}, K = {}, c0 = {}",
                    cfg.trials, cfg.seed, cfg.k_const, cfg.c0
                ),
                columns: vec![
                    "check".into(),
                    "pass".into(),
                    "fail".into(),
                    "hypothesis-not-met".into(),
                ],
                rows,
            }
            .render(format);
            if format == Format::Table {
                let s = &report.stats;
                if let Some(v) = &s.max_gap_ratio_sq {
                    text.push_str(&format!("  max gap ratio       ~{:.6}\n", to_f64(v).sqrt()));
                }
                if let Some(v) = &s.max_center_ratio_pow4 {
                    text.push_str(&format!("  max center ratio    ~{:.6}\n", to_f64(v).powf(0.25)));
                }
                if let Some(v) = &s.min_sharpened_ratio {
                    text.push_str(&format!("  min sharpened ratio ~{:.6}\n", to_f64(v)));
                }
                if let Some(v) = &s.max_kprgt_ratio_sq {
                    text.push_str(&format!("  max kprgt ratio     ~{:.6}\n", to_f64(v).sqrt()));
                }
            }
            text
        }
    };
    emit(&text, &args.common.out)?;
    Ok(if report.any_failure() { 1 } else { 0 })
}

fn cmd_probe(args: ProbeArgs) -> Result<i32> {
    let gamma = parse_rational(&args.gamma)
        .ok_or_else(|| anyhow!("--gamma: cannot parse \"{}\" as p/q", args.gamma))?;
    let deltas: Vec<Rational> = args
        .deltas
        .iter()
        .map(|s| parse_rational(s).ok_or_else(|| anyhow!("--deltas: cannot parse \"{s}\" as p/q")))
        .collect::<Result<_>>()?;
    let (a, b) = match &args.input {
        Some(path) => {
            let doc = load_document(path)?;
            (doc.require_set("A")?.clone(), doc.require_set("B")?.clone())
        }
        None => {
            let unit = IntervalUnion::centered(&rint(2));
            (unit.clone(), unit)
        }
    };
    let points = sharpness_probe(&gamma, &deltas, &a, &b)?;

    let rows: Vec<Vec<String>> = points
        .iter()
        .map(|p| {
            let exact = |r: &Option<Rational>| r.as_ref().map(|v| v.to_string()).unwrap_or_default();
            let float = |r: &Option<Rational>| {
                r.as_ref()
                    .and_then(|v| v.to_f64())
                    .map(|f| f.to_string())
                    .unwrap_or_default()
            };
            let ratio = p.d_rs.as_ref().map(|d| d / (&p.delta * &p.delta));
            vec![
                p.delta.to_string(),
                to_f64(&p.delta).to_string(),
                exact(&p.d_rs),
                float(&p.d_rs),
                exact(&p.c_gap),
                float(&p.c_gap),
                ratio.map(|r| r.to_string()).unwrap_or_default(),
                p.slope_to_next.map(|s| s.to_string()).unwrap_or_default(),
                if p.valid { "yes".into() } else { "no".into() },
            ]
        })
        .collect();
    let report = RowReport {
        title: format!("sharpness probe: gamma = {gamma}, A = {a}, B = {b}"),
        columns: vec![
            "delta".into(),
            "delta_float".into(),
            "d_rs".into(),
            "d_rs_float".into(),
            "c_gap".into(),
            "c_gap_float".into(),
            "d_over_delta_sq".into(),
            "slope".into(),
            "valid".into(),
        ],
        rows,
    };
    emit(&report.render(args.common.format), &args.common.out)?;
    Ok(0)
}

fn cmd_approx(args: ApproxArgs) -> Result<i32> {
    let doc = load_document(&args.input)?;
    if doc.sets.is_empty() {
        bail!("document contains no sets");
    }
    let rows: Vec<Vec<String>> = doc
        .sets
        .iter()
        .map(|(name, set)| {
            let best = best_interval(set);
            let interval = best
                .interval
                .as_ref()
                .map(|i| i.to_string())
                .unwrap_or_else(|| "∅".into());
            vec![
                name.clone(),
                set.to_string(),
                interval,
                best.gap.to_string(),
                to_f64(&best.gap).to_string(),
            ]
        })
        .collect();
    let report = RowReport {
        title: "best interval approximation".into(),
        columns: vec![
            "set".into(),
            "union".into(),
            "interval".into(),
            "gap".into(),
            "gap_float".into(),
        ],
        rows,
    };
    emit(&report.render(args.common.format), &args.common.out)?;
    Ok(0)
}

fn cmd_check(args: CheckArgs) -> Result<i32> {
    let doc = load_document(&args.input)?;
    let k = rational_flag(&args.k_const, "K", calibration::frozen_k())?;
    let c0 = rational_flag(&args.c0, "c0", calibration::frozen_c0())?;

    let (outcome, fields): (CheckOutcome, Vec<(String, String, Option<f64>)>) =
        match args.lemma.as_str() {
            "identity" => {
                let r = identity_check(
                    doc.require_set("A")?,
                    doc.require_set("B")?,
                    doc.require_param("tau")?,
                )?;
                let outcome = CheckOutcome::from_bool(r.residual == rint(0));
                (
                    outcome,
                    vec![
                        ("regime".into(), r.regime.to_string(), None),
                        exact_field("lhs", &r.lhs),
                        exact_field("rhs", &r.rhs),
                        exact_field("residual", &r.residual),
                    ],
                )
            }
            "inclusion" => {
                let r = difference_inclusion_check(
                    doc.require_set("A")?,
                    doc.require_set("B")?,
                    doc.require_param("alpha1")?,
                    doc.require_param("alpha2")?,
                )?;
                (
                    r.outcome,
                    vec![
                        ("vacuous".into(), r.vacuous.to_string(), None),
                        exact_field("uncovered", &r.uncovered),
                    ],
                )
            }
            "keystone" => {
                let r = keystone_check(doc.require_set("A")?, doc.require_set("B")?)?;
                (
                    r.outcome,
                    vec![exact_field("diameter", &r.diameter), exact_field("bound", &r.bound)],
                )
            }
            "kemperman" => {
                let r = kemperman_check(doc.require_set("A")?, doc.require_set("B")?)?;
                (
                    r.outcome,
                    vec![
                        exact_field("sum_measure", &r.sum_measure),
                        exact_field("bound", &r.bound),
                    ],
                )
            }
            "truncation" => {
                let r = truncation_deficit_check(
                    doc.require_set("A")?,
                    doc.require_set("B")?,
                    doc.require_set("C")?,
                    doc.require_param("eta")?,
                    doc.require_param("eta_prime")?,
                )?;
                (
                    r.outcome,
                    vec![
                        exact_field("base_deficit", &r.base_deficit),
                        exact_field("truncated_deficit", &r.truncated_deficit),
                        ("pointwise_ok".into(), r.pointwise_ok.to_string(), None),
                    ],
                )
            }
            "superlevel_approx" => {
                let r = superlevel_approx_check(
                    doc.require_set("A")?,
                    doc.require_set("B")?,
                    doc.require_set_any(&["E", "C"])?,
                )?;
                (
                    r.outcome,
                    vec![
                        exact_field("deficit", &r.deficit),
                        exact_field("tau", &r.tau),
                        exact_field("symdiff", &r.symdiff),
                        exact_field("measure_drift", &r.measure_drift),
                        ("monotone_ok".into(), r.monotone_ok.to_string(), None),
                    ],
                )
            }
            "equal_measure" => {
                let r = equal_measure_case_check(
                    doc.require_set("A")?,
                    doc.require_set("B")?,
                    doc.require_set("C")?,
                )?;
                (
                    r.outcome,
                    vec![
                        exact_field("deficit", &r.deficit),
                        exact_field("gamma", &r.gamma),
                        exact_field("superlevel_measure", &r.superlevel_measure),
                        exact_field("interval_gap", &r.interval_gap),
                    ],
                )
            }
            "main_theorem" => {
                let r = verify_main_theorem(
                    doc.require_set("A")?,
                    doc.require_set("B")?,
                    doc.require_set("C")?,
                    &k,
                )?;
                match r {
                    None => (CheckOutcome::HypothesisNotMet, vec![
                        ("note".into(), "triple is not strictly admissible".into(), None),
                    ]),
                    Some(rep) => {
                        let outcome = if !rep.hypothesis_met {
                            CheckOutcome::HypothesisNotMet
                        } else {
                            CheckOutcome::from_bool(rep.gap_bound_ok(&k) && rep.center_bound_ok(&k))
                        };
                        (
                            outcome,
                            vec![
                                exact_field("epsilon", &rep.epsilon),
                                exact_field("eta", &rep.eta),
                                exact_field("gap_a", &rep.gaps[0]),
                                exact_field("gap_b", &rep.gaps[1]),
                                exact_field("gap_c", &rep.gaps[2]),
                                exact_field("center_discrepancy", &rep.center_discrepancy),
                                ("ratio_gap".into(), rep.ratio_gap.to_string(), None),
                                ("ratio_center".into(), rep.ratio_center.to_string(), None),
                                ("hypothesis_met".into(), rep.hypothesis_met.to_string(), None),
                            ],
                        )
                    }
                }
            }
            "sharpened_rs" => {
                let r = verify_sharpened_rs(
                    doc.require_set("A")?,
                    doc.require_set("B")?,
                    doc.require_set("C")?,
                    &c0,
                )?;
                let mut fields = vec![
                    exact_field("deficit", &r.deficit),
                    exact_field("threshold", &r.threshold),
                ];
                if let Some(best) = &r.best_passing_c0 {
                    fields.push(exact_field("best_passing_c0", best));
                }
                (r.outcome, fields)
            }
            "kprgt_stability" => {
                let r = verify_kprgt_stability(
                    doc.require_set("A")?,
                    doc.require_set("B")?,
                    doc.require_param("tau")?,
                    doc.require_param("eta")?,
                    &k,
                )?;
                let mut fields = vec![
                    ("sandwich_ok".into(), r.sandwich_ok.to_string(), None),
                    exact_field("gap_a", &r.gap_a),
                    exact_field("gap_b", &r.gap_b),
                ];
                if let Some(d) = &r.d_kprgt {
                    fields.insert(0, exact_field("d_kprgt", d));
                }
                (r.outcome, fields)
            }
            other => bail!(
                "unknown lemma \"{other}\" (expected identity, inclusion, keystone, kemperman, \
                 truncation, superlevel_approx, equal_measure, main_theorem, sharpened_rs, \
                 or kprgt_stability)"
            ),
        };

    let report = FieldReport {
        title: format!("check: {}", args.lemma),
        status: Some(outcome.to_string()),
        fields,
        document: Some(document_to_value(&doc)),
    };
    emit(&report.render(args.common.format), &args.common.out)?;
    Ok(if outcome.is_fail() { 1 } else { 0 })
}
