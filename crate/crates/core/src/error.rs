use crate::rational::Rational;
use thiserror::Error;

/// Input errors raised by the exact engine.
///
/// Every operation is total on its stated domain; these variants cover the
/// documented domain violations and nothing else.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid endpoint pair: lo {lo} > hi {hi}")]
    InvalidEndpoints { lo: Rational, hi: Rational },

    #[error("{0} must be nonempty")]
    EmptySet(&'static str),

    #[error("affine scale factor must be nonzero")]
    ZeroScale,

    #[error("truncation amounts {left} + {right} must be nonnegative and less than the set measure {measure}")]
    BadTruncation {
        left: Rational,
        right: Rational,
        measure: Rational,
    },

    #[error("level {tau} outside the valid range [0, {max}]")]
    LevelOutOfRange { tau: Rational, max: Rational },

    #[error("target measure {target} outside [0, {max}]")]
    MeasureOutOfRange { target: Rational, max: Rational },

    #[error("measure arguments must be positive, got {0}")]
    NonpositiveMeasure(Rational),

    #[error("{0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
