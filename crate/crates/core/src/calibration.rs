//! Frozen audit constants.
//!
//! The stability theorems hold with some finite absolute constants; this
//! crate measures them. The values below were frozen from a calibration run
//! over the 10,000-trial randomized corpus with [`CORPUS_SEED`]: the
//! extreme observed ratios were padded by a factor of two (upward for `K`,
//! downward for `c0`) and committed. Observed extremes on that corpus:
//! max gap ratio 0.8872, max center ratio 0.0027, max KPRGT gap ratio
//! 0.0012 (all versus `K`), and min sharpened ratio 1.3091 (versus `c0`).
//! Re-deriving them is described in the README's calibration section.

use crate::rational::{rat, Rational};

/// Seed of the frozen audit corpus.
pub const CORPUS_SEED: u64 = 42;

/// Trial count of the frozen audit corpus.
pub const CORPUS_TRIALS: u64 = 10_000;

/// Frozen stability constant `K`: hypothesis gate `epsilon <= eta^4 / K`
/// and conclusion bounds `gap * eta <= K sqrt(epsilon) max`,
/// `|a+b-c| eta^2 <= K epsilon^{1/4} max`, `gap <= K sqrt(D')`.
pub fn frozen_k() -> Rational {
    rat(2, 1)
}

/// Frozen sharpened-inequality constant `c0`: `D >= c0 eta^2 |A △ I|^2`.
pub fn frozen_c0() -> Rational {
    rat(1, 2)
}
