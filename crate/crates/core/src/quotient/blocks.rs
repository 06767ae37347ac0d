use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Maximal run `n_lo..=n_hi` of indices sharing the quotient `q = ⌊x/n⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientBlock {
    pub q: u64,
    pub n_lo: u64,
    pub n_hi: u64,
}

impl QuotientBlock {
    pub fn len(&self) -> u64 {
        self.n_hi - self.n_lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Lazy iterator over the quotient blocks of `x`, in ascending `n_lo`.
#[derive(Debug, Clone)]
pub struct Blocks {
    x: u64,
    next: u64,
}

impl Iterator for Blocks {
    type Item = QuotientBlock;

    fn next(&mut self) -> Option<QuotientBlock> {
        if self.next > self.x {
            return None;
        }
        let n_lo = self.next;
        let q = self.x / n_lo;
        let n_hi = self.x / q;
        self.next = n_hi + 1;
        Some(QuotientBlock { q, n_lo, n_hi })
    }
}

/// Splits `[1, x]` into quotient blocks using `n_hi = ⌊x / ⌊x/n_lo⌋⌋`.
///
/// There are at most `2·⌊√x⌋` blocks.
pub fn quotient_blocks(x: u64) -> Result<Blocks> {
    if x == 0 {
        return Err(invalid("x must be positive"));
    }
    Ok(Blocks { x, next: 1 })
}
