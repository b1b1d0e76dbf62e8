//! Deterministic pseudo-random generation for verification campaigns.
//!
//! The generator is SplitMix64 so that a (seed, flags) pair reproduces the
//! exact same campaign on any implementation. The recurrence, on 64-bit
//! wrapping integers:
//!
//!     state += 0x9E3779B97F4A7C15
//!     z  = state
//!     z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//!     z ^= z >> 27;  z *= 0x94D049BB133111EB
//!     output = z ^ (z >> 31)
//!
//! Bounded draws use plain modulo reduction (`next_u64() % n`); the bias is
//! irrelevant here and the reduction is part of the specification.

use lagver_core::Rat;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..n` by modulo reduction.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    /// Draw in the inclusive range `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Random R for a campaign: degree uniform in `[deg_min, deg_max]`, integer
/// coefficients uniform in `[-bound, bound]`, r_0 forced to 1, and the
/// leading coefficient resampled until nonzero.
pub fn random_r_coeffs(rng: &mut SplitMix64, deg_min: i64, deg_max: i64, bound: i64) -> Vec<Rat> {
    assert!(deg_min >= 1 && deg_max >= deg_min && bound >= 1);
    let degree = rng.int_in(deg_min, deg_max);
    let mut coeffs = vec![Rat::one()];
    for _ in 0..degree {
        coeffs.push(Rat::from_int(rng.int_in(-bound, bound)));
    }
    while coeffs.last().unwrap().is_zero() {
        *coeffs.last_mut().unwrap() = Rat::from_int(rng.int_in(-bound, bound));
    }
    coeffs
}
