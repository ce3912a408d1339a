//! Exact scalar arithmetic.
//!
//! Every scalar quantity in the crate (measures, levels, deficits,
//! thresholds) is a [`Rational`]: an arbitrary-precision fraction kept in
//! canonical reduced form with a positive denominator. Floats never enter
//! the exact layer; the few reporting paths that want a decimal rendering
//! convert at the very end via [`to_f64`].

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Builds `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or a plain integer string.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let r: Rational = s.parse().ok()?;
    Some(r)
}

/// Float rendering of an exact value, for reports and CSV convenience
/// columns only.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Out-of-range magnitudes cannot occur for the bounded sets this
        // crate manipulates, but keep the conversion total.
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Largest integer `<= r`.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// `x * x`, used by the square-comparison idiom that keeps square-root
/// inequalities inside rational arithmetic.
pub fn sq(x: &Rational) -> Rational {
    x * x
}

/// `max(a, b)` by value.
pub fn rmax(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// `min(a, b)` by value.
pub fn rmin(a: &Rational, b: &Rational) -> Rational {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}
