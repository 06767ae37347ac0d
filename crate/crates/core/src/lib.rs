//! Exact evaluation of the fractional finite sums `Σ_{n≤x} f(⌊x/n⌋)` for the
//! Euler totient `φ`, the Dedekind `ψ` and the sum-of-divisors `σ`, computed
//! by three independent strategies, together with the machinery used to
//! compare them against their `c·x·log x` asymptotics.
//!
//! The crate is organised in four layers:
//!
//! - [`arith`]: sieves, factorization and pointwise evaluation of `φ, ψ, σ, μ, μ²`.
//! - [`quotient`]: floor-quotient blocks, the three summation strategies, the
//!   exponential-sum divisibility indicator and the sub-sums `S1..S6`.
//! - [`asymptotics`]: main terms, error terms, series constants, bound fits and
//!   error-sign scans.
//! - [`report`]: table reproduction, verification suites and benchmarks behind
//!   the `fracsum` binary.
//!
//! ```
//! use fracsum::{frac_sum_blocks, ArithFn};
//!
//! let r = frac_sum_blocks(ArithFn::Phi, 100).unwrap();
//! assert_eq!(r.exact_sum, 275);
//! ```

pub mod arith;
pub mod asymptotics;
mod error;
pub mod numeric;
pub mod quotient;
pub mod report;

pub use arith::{
    divisor_sum_identity, eval_point, factorize, sieve_table, ArithFn, ArithmeticTable,
    Factorization,
};
pub use asymptotics::{
    bound_fit, error_scan, error_term, main_term, partial_series, sample_grid, ErrorScan,
    SeriesConstants, SeriesKind, StepRule,
};
pub use error::{Error, Result};
pub use quotient::{
    decomposition_check, frac_sum, frac_sum_blocks, frac_sum_decomposition, frac_sum_naive,
    indicator, quotient_blocks, sub_sum, FracSumResult, QuotientBlock, Strategy, SubSumLabel,
    SubSumValue,
};
