//! Exact computational calculus for finite unions of rational intervals on
//! the line: set algebra, indicator convolutions, rearrangement-inequality
//! deficits, and stability verifiers, all in arbitrary-precision rational
//! arithmetic.
//!
//! The crate is organized around five layers:
//!
//! * [`interval`] — canonical interval unions and their exact set algebra
//!   (Boolean operations, Minkowski sums, truncation, torus projection);
//! * [`conv`] — piecewise-linear representation of `1_A * 1_B`, pairings,
//!   superlevel sets, and layer-cake integrals;
//! * [`deficit`] — the Riesz–Sobolev and KPRGT deficit functionals and
//!   exact lemma-level checkers;
//! * [`stability`] — best-interval approximation, stability-theorem
//!   verifiers, and the sharpness probe family;
//! * [`audit`] — seeded randomized property suites over all of the above.

pub mod audit;
pub mod calibration;
pub mod conv;
pub mod deficit;
pub mod error;
pub mod interval;
pub mod oracle;
pub mod random;
pub mod rational;
pub mod stability;

pub use conv::{convolve_indicators, pairing, superlevel, tail_integral, LevelQuery, PiecewiseLinear};
pub use deficit::{
    admissibility_eta, deficit_kprgt, deficit_rs, rearranged_pairing, CheckOutcome, DeficitReport,
    IdentityReport, Regime,
};
pub use error::{Error, Result};
pub use interval::{Interval, IntervalUnion, SetOp};
pub use rational::Rational;
pub use stability::{best_interval, BestInterval, ProbePoint, StabilityReport};
