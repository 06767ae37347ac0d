//! Fractional finite sums `Σ_{n≤x} f(⌊x/n⌋)` and their sub-sum decomposition.

mod blocks;
mod indicator;
mod subsums;
mod sums;

pub use blocks::{quotient_blocks, QuotientBlock};
pub use indicator::{indicator, indicator_or_exact, INDICATOR_TOLERANCE};
pub use subsums::{
    decomposition_check, decomposition_check_budgeted, sub_sum, sub_sum_with, Divisibility,
    SubSumLabel, SubSumValue, DEFAULT_SUBSUM_BUDGET,
};
pub use sums::{
    frac_sum, frac_sum_blocks, frac_sum_decomposition, frac_sum_naive, FracSumResult, Strategy,
};
