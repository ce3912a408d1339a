//! Independent floating-point grid oracle.
//!
//! Everything here deliberately avoids the exact engine: sets are flattened
//! to `f64` endpoint lists, the convolution value at a grid midpoint is the
//! clipped-overlap sum evaluated in floats, and the pairing is a midpoint
//! Riemann sum. Used to cross-check derived exact values; converges at rate
//! `O(1/n)` because the integrand is piecewise affine with finitely many
//! breakpoints.

use crate::interval::IntervalUnion;
use crate::rational::to_f64;

fn flatten(u: &IntervalUnion) -> Vec<(f64, f64)> {
    u.components()
        .iter()
        .map(|c| (to_f64(&c.lo), to_f64(&c.hi)))
        .collect()
}

fn conv_value(a: &[(f64, f64)], b: &[(f64, f64)], x: f64) -> f64 {
    let mut v = 0.0;
    for &(alo, ahi) in a {
        for &(blo, bhi) in b {
            let lo = alo.max(x - bhi);
            let hi = ahi.min(x - blo);
            if hi > lo {
                v += hi - lo;
            }
        }
    }
    v
}

fn member(c: &[(f64, f64)], x: f64) -> bool {
    c.iter().any(|&(lo, hi)| lo <= x && x < hi)
}

/// Midpoint-Riemann approximation of `<1_A * 1_B, 1_C>` on an
/// `n_cells`-cell grid over the bounding box of `C` clipped to the support
/// of the convolution. Exactly `0.0` when `C` misses the support.
pub fn grid_oracle_pairing(
    a: &IntervalUnion,
    b: &IntervalUnion,
    c: &IntervalUnion,
    n_cells: u32,
) -> f64 {
    assert!(n_cells >= 1, "need at least one cell");
    if a.is_empty() || b.is_empty() || c.is_empty() {
        return 0.0;
    }
    let fa = flatten(a);
    let fb = flatten(b);
    let fc = flatten(c);

    // support hull of the convolution
    let supp_lo = fa.iter().map(|p| p.0).fold(f64::INFINITY, f64::min)
        + fb.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let supp_hi = fa.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max)
        + fb.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let box_lo = supp_lo.max(fc.first().map(|p| p.0).unwrap_or(0.0));
    let box_hi = supp_hi.min(fc.last().map(|p| p.1).unwrap_or(0.0));
    if box_lo >= box_hi {
        return 0.0;
    }

    let n = n_cells as usize;
    let width = (box_hi - box_lo) / n as f64;
    let mut total = 0.0;
    for k in 0..n {
        let x = box_lo + (k as f64 + 0.5) * width;
        if member(&fc, x) {
            total += conv_value(&fa, &fb, x);
        }
    }
    total * width
}
