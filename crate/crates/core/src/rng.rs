//! Stateless 64-bit mixing and position-indexed random streams.
//!
//! Everything random in this crate is derived from [`mix64`], the SplitMix64
//! output finalizer. A stream with key `k` yields at position `i` the value
//! `mix64(k + (i + 1) * GOLDEN_GAMMA)` (wrapping arithmetic), which is exactly
//! the `i`-th output of a SplitMix64 generator whose state starts at `k`.
//! Because every position can be computed independently, consumers can
//! evaluate draws in any order, or in parallel, and get identical results.

/// Odd Weyl increment used by SplitMix64.
pub const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer (Stafford variant 13).
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Folds a sequence of words into one key: `h = mix64(h ^ w + GOLDEN_GAMMA)`
/// starting from `h = 0`, for each word `w` in order.
pub fn mix_words(words: &[u64]) -> u64 {
    words
        .iter()
        .fold(0u64, |h, &w| mix64((h ^ w).wrapping_add(GOLDEN_GAMMA)))
}

/// Random-access view of a SplitMix64 sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stream {
    key: u64,
}

impl Stream {
    pub fn new(key: u64) -> Self {
        Stream { key }
    }

    /// Draw at an absolute position.
    #[inline]
    pub fn at(&self, position: u64) -> u64 {
        mix64(
            self.key
                .wrapping_add(position.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)),
        )
    }
}

/// Integer threshold `t` such that `draw < t` happens with probability `p`
/// for a uniform 64-bit draw. `None` means "always" (p = 1).
pub fn bernoulli_threshold(p: f64) -> Option<u64> {
    if p >= 1.0 {
        None
    } else if p <= 0.0 {
        Some(0)
    } else {
        // p < 1 so the product is below 2^64; the cast truncates toward zero.
        Some((p * 18_446_744_073_709_551_616.0) as u64)
    }
}

#[inline]
pub fn bernoulli(draw: u64, threshold: Option<u64>) -> bool {
    match threshold {
        None => true,
        Some(t) => draw < t,
    }
}
