//! Self-contained, portable random number generation.
//!
//! Datasets must reproduce bit-for-bit from a seed on any platform, so the
//! generator is pinned to two published algorithms rather than to whatever a
//! dependency happens to ship: state initialization with SplitMix64 and the
//! xoshiro256** stream of Blackman and Vigna. Normal deviates come from the
//! Marsaglia polar method, which needs nothing beyond `ln` and `sqrt`.

use libm::{log, sqrt};

/// One step of the SplitMix64 sequence; returns the advanced state and the
/// output word.
pub fn split_mix_64(state: u64) -> (u64, u64) {
    let state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    (state, z ^ (z >> 31))
}

/// xoshiro256** generator with a cached spare normal deviate.
#[derive(Debug, Clone)]
pub struct Xoshiro256 {
    s: [u64; 4],
    spare_normal: Option<f64>,
}

impl Xoshiro256 {
    /// Seeds the four state words from consecutive SplitMix64 outputs.
    pub fn new(seed: u64) -> Self {
        let mut sm = seed;
        let mut s = [0u64; 4];
        for word in s.iter_mut() {
            let (next, out) = split_mix_64(sm);
            sm = next;
            *word = out;
        }
        Xoshiro256 {
            s,
            spare_normal: None,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let s = &mut self.s;
        let out = s[1].wrapping_mul(5).rotate_left(7).wrapping_mul(9);
        let t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = s[3].rotate_left(45);
        out
    }

    /// Uniform in [0, 1), using the top 53 bits of the stream.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn next_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in [0, n).
    pub fn next_index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        // Modulo bias is negligible for the dataset sizes involved here.
        (self.next_u64() % n as u64) as usize
    }

    /// Standard normal deviate via the Marsaglia polar method. Deviates are
    /// produced in pairs; the second of each pair is cached and returned by
    /// the following call, so the draw order is deterministic.
    pub fn next_gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare_normal.take() {
            return z;
        }
        loop {
            let u = self.next_in(-1.0, 1.0);
            let v = self.next_in(-1.0, 1.0);
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                let m = sqrt(-2.0 * log(s) / s);
                self.spare_normal = Some(v * m);
                return u * m;
            }
        }
    }
}
