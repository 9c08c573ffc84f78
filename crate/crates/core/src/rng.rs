//! Deterministic random number streams.
//!
//! All stochastic pieces of the crate draw from an [`RngStream`]. A stream is
//! a ChaCha8 generator addressed by `(seed, stream id)`: identical ids always
//! replay the same sequence, and distinct stream ids under one seed are
//! independent by the cipher's counter construction, which is what makes
//! parallel experiment runs reproducible regardless of scheduling.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

const INV_2_53: f64 = 1.0 / (1u64 << 53) as f64;

#[derive(Clone, Debug)]
enum Source {
    ChaCha(ChaCha8Rng),
    /// Emits one constant over and over; used by tests that pin `rand`.
    Fixed(f64),
}

/// A seeded uniform random stream over `[0, 1)`.
#[derive(Clone, Debug)]
pub struct RngStream {
    seed: u64,
    source: Source,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self::substream(seed, 0)
    }

    /// Stream `stream` of the generator keyed by `seed`. Streams with
    /// different ids never overlap, so per-run derived streams stay
    /// independent.
    pub fn substream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self {
            seed,
            source: Source::ChaCha(rng),
        }
    }

    /// A stream that always returns `value`. Panics unless `0 <= value < 1`.
    pub fn fixed(value: f64) -> Self {
        assert!((0.0..1.0).contains(&value), "pinned value must be in [0,1)");
        Self {
            seed: 0,
            source: Source::Fixed(value),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Next uniform draw in `[0, 1)`.
    pub fn next_uniform(&mut self) -> f64 {
        match &mut self.source {
            Source::ChaCha(rng) => (rng.next_u64() >> 11) as f64 * INV_2_53,
            Source::Fixed(v) => *v,
        }
    }

    /// Uniform draw in `[lo, hi)`.
    pub fn next_range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.next_uniform() * (hi - lo)
    }

    /// Uniform integer in `0..n`.
    pub fn next_below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        match &mut self.source {
            Source::ChaCha(rng) => (((rng.next_u64() as u128) * (n as u128)) >> 64) as usize,
            Source::Fixed(v) => ((*v * n as f64) as usize).min(n - 1),
        }
    }

    /// Fair coin mapped to `+1.0` / `-1.0`.
    pub fn next_sign(&mut self) -> f64 {
        if self.next_uniform() < 0.5 {
            1.0
        } else {
            -1.0
        }
    }

    /// `k` distinct indices drawn uniformly from `0..n` without replacement
    /// (the leading block of a partial Fisher-Yates shuffle).
    pub fn sample_indices(&mut self, n: usize, k: usize) -> Vec<usize> {
        debug_assert!(k <= n);
        let mut idx: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.next_below(n - i);
            idx.swap(i, j);
        }
        idx.truncate(k);
        idx
    }
}
