//! Deterministic random streams.
//!
//! Every random draw in the crate comes from ChaCha8 keyed by the scenario
//! seed. The 256-bit key is expanded from the 64-bit seed with SplitMix64,
//! and each concern (topology wiring, link attributes, flows) reads from its
//! own ChaCha stream id, so drawing more values for one concern never shifts
//! another. Flows additionally get one stream per flow index.
//!
//! Uniform integer and real sampling is implemented here rather than taken
//! from `rand`, so the mapping from raw words to values is pinned by this
//! crate and not by a dependency's version.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent concerns that consume randomness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stream {
    Topology,
    LinkAttributes,
    Flow(u32),
}

impl Stream {
    fn id(self) -> u64 {
        match self {
            Stream::Topology => 1 << 32,
            Stream::LinkAttributes => 2 << 32,
            Stream::Flow(index) => (3 << 32) | u64::from(index),
        }
    }
}

pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A seeded random stream for one concern.
#[derive(Debug, Clone)]
pub struct StreamRng {
    inner: ChaCha8Rng,
}

impl StreamRng {
    pub fn new(seed: u64, stream: Stream) -> Self {
        let mut state = seed;
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        let mut inner = ChaCha8Rng::from_seed(key);
        inner.set_stream(stream.id());
        Self { inner }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform integer in `[0, bound)`. `bound` must be non-zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty sampling range");
        // Lemire's multiply-shift with rejection of the biased low zone.
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let m = u128::from(self.next_u64()) * u128::from(bound);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }

    /// Uniform integer in the inclusive range `[lo, hi]`.
    pub fn int_inclusive(&mut self, lo: u64, hi: u64) -> u64 {
        assert!(lo <= hi);
        match (hi - lo).checked_add(1) {
            Some(span) => lo + self.below(span),
            None => self.next_u64(),
        }
    }

    /// Uniform real in `[0, 1)` with 53 bits of precision.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform real in `[lo, hi)`, or exactly `lo` when the range is degenerate.
    pub fn real(&mut self, lo: f64, hi: f64) -> f64 {
        if lo == hi {
            // Still consume a word so stream positions do not depend on range widths.
            self.next_u64();
            return lo;
        }
        let x = lo + (hi - lo) * self.unit();
        // Rounding can land exactly on `hi` for very narrow ranges.
        if x >= hi {
            lo
        } else {
            x
        }
    }
}
