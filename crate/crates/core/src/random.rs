//! Deterministic random generation of rational interval unions.
//!
//! Reproducibility across platforms and thread counts is part of the
//! contract: the generator is a fully specified 64-bit linear congruential
//! generator (Knuth's MMIX constants), and audit trials derive their seeds
//! as `seed + index` through a splitmix-style mix, so parallel and serial
//! runs produce identical corpora.

use crate::error::{Error, Result};
use crate::interval::IntervalUnion;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use std::collections::BTreeSet;

const LCG_MULTIPLIER: u64 = 6364136223846793005;
const LCG_INCREMENT: u64 = 1442695040888963407;

/// 64-bit linear congruential generator; draws discard the weak low bits.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        let mut g = Lcg { state: seed };
        // one warm-up step so nearby seeds separate immediately
        g.next_u64();
        g
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(LCG_MULTIPLIER)
            .wrapping_add(LCG_INCREMENT);
        self.state
    }

    /// Uniform draw in `[0, n)`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "range must be nonempty");
        (self.next_u64() >> 11) % n
    }

    /// Uniform draw in `[lo, hi]` (inclusive).
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// Random fraction `p/q` in `[0, 1)` with `q <= denom_bound`.
    pub fn fraction(&mut self, denom_bound: u64) -> Rational {
        let q = 1 + self.below(denom_bound);
        let p = self.below(q.max(1));
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    /// Random fraction `p/q` in `[0, 1]` with `q <= denom_bound`.
    pub fn fraction_closed(&mut self, denom_bound: u64) -> Rational {
        let q = 1 + self.below(denom_bound);
        let p = self.below(q + 1);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    /// Random fraction strictly inside `(0, 1)` (denominator at least 2).
    pub fn fraction_open(&mut self, denom_bound: u64) -> Rational {
        let q = 2 + self.below(denom_bound.max(2) - 1);
        let p = 1 + self.below(q - 1);
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    /// Coin flip.
    pub fn coin(&mut self) -> bool {
        self.below(2) == 0
    }
}

/// Splitmix-style finalizer; audit trial `i` uses `mix(seed + i)`.
pub fn mix(z: u64) -> u64 {
    let mut z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Deterministic pseudo-random union of `n_components` disjoint intervals
/// with endpoints on the lattice `{ k / denom_bound }` inside
/// `[-range, range]`. Same seed, same output, on every platform.
pub fn random_set(
    seed: u64,
    n_components: usize,
    denom_bound: u64,
    range: &Rational,
) -> Result<IntervalUnion> {
    let mut rng = Lcg::new(seed);
    random_set_with(&mut rng, n_components, denom_bound, range)
}

/// As [`random_set`], drawing from a caller-owned generator.
pub fn random_set_with(
    rng: &mut Lcg,
    n_components: usize,
    denom_bound: u64,
    range: &Rational,
) -> Result<IntervalUnion> {
    if n_components == 0 {
        return Err(Error::BadParameter("n_components must be at least 1".into()));
    }
    if denom_bound == 0 {
        return Err(Error::BadParameter("denom_bound must be at least 1".into()));
    }
    if !range.is_positive() {
        return Err(Error::BadParameter(format!("range must be positive, got {range}")));
    }

    // lattice indices k with |k / denom_bound| <= range
    let max_index = (range * Rational::from_integer(BigInt::from(denom_bound)))
        .floor()
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::BadParameter("range too large".into()))?;
    let lattice_size = 2 * max_index + 1;
    let needed = 2 * n_components as i64;
    if lattice_size < needed {
        return Err(Error::BadParameter(format!(
            "lattice of {lattice_size} points cannot host {n_components} disjoint components"
        )));
    }

    // sorted endpoints without replacement
    let mut endpoints: BTreeSet<i64> = BTreeSet::new();
    while (endpoints.len() as i64) < needed {
        let k = -max_index + rng.below(lattice_size as u64) as i64;
        endpoints.insert(k);
    }
    let q = BigInt::from(denom_bound);
    let points: Vec<Rational> = endpoints
        .into_iter()
        .map(|k| Rational::new(BigInt::from(k), q.clone()))
        .collect();
    let raw: Vec<(Rational, Rational)> = points
        .chunks(2)
        .map(|pair| (pair[0].clone(), pair[1].clone()))
        .collect();
    IntervalUnion::normalize(raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::max_denominator;
    use crate::rational::rint;
    use num_traits::One;

    #[test]
    fn frozen_fixture_for_seed_zero() {
        // generated once and pinned: a regression anchor for the generator
        let set = random_set(0, 3, 8, &rint(2)).unwrap();
        let rendered = set.to_string();
        assert_eq!(rendered, "[-2, -1/2) ∪ [-1/8, 3/8) ∪ [5/8, 9/8)");
    }

    #[test]
    fn same_seed_same_output_different_seeds_differ() {
        let a = random_set(42, 5, 64, &rint(4)).unwrap();
        let b = random_set(42, 5, 64, &rint(4)).unwrap();
        assert_eq!(a, b);
        // sanity only: distinct seeds give distinct sets for this fixture
        let c = random_set(43, 5, 64, &rint(4)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn respects_bounds() {
        let range = rint(4);
        for seed in 0..50 {
            let set = random_set(seed, 6, 64, &range).unwrap();
            assert!(!set.is_empty());
            assert!(set.components().len() <= 6);
            let hull = set.hull().unwrap();
            assert!(hull.lo >= -range.clone() && hull.hi <= range);
            assert!(max_denominator(&set) <= 64.into());
        }
    }

    #[test]
    fn single_component_is_an_interval() {
        let set = random_set(7, 1, 16, &rint(1)).unwrap();
        assert_eq!(set.components().len(), 1);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(random_set(1, 0, 8, &rint(1)).is_err());
        assert!(random_set(1, 1, 0, &rint(1)).is_err());
        assert!(random_set(1, 1, 8, &rint(0)).is_err());
        // lattice too small for the requested component count
        assert!(random_set(1, 5, 1, &rint(1)).is_err());
    }

    #[test]
    fn fraction_ranges() {
        let mut rng = Lcg::new(9);
        for _ in 0..200 {
            let f = rng.fraction(16);
            assert!(f >= Rational::from_integer(0.into()) && f < Rational::one());
            let g = rng.fraction_open(16);
            assert!(g.is_positive() && g < Rational::one());
            let h = rng.fraction_closed(16);
            assert!(h >= Rational::from_integer(0.into()) && h <= Rational::one());
        }
    }
}
