use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::blocks::quotient_blocks;
use super::subsums::{sub_sum_with, Divisibility, SubSumLabel, DEFAULT_SUBSUM_BUDGET};
use crate::arith::{eval_point, sieve_table, ArithFn, ArithmeticTable};
use crate::asymptotics::main_term;
use crate::error::{invalid, Error, Result};

/// How an exact sum was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Direct loop over `n ≤ x` against a sieved table.
    Naive,
    /// One pointwise evaluation per quotient block.
    Blocks,
    /// `S_odd − S_even`, rounded from floating point.
    Decomposition,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Self::Naive, Self::Blocks, Self::Decomposition];

    pub fn name(self) -> &'static str {
        match self {
            Self::Naive => "naive",
            Self::Blocks => "blocks",
            Self::Decomposition => "decomposition",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(Self::Naive),
            "blocks" => Ok(Self::Blocks),
            "decomposition" => Ok(Self::Decomposition),
            other => Err(invalid(format!("unknown strategy '{other}'"))),
        }
    }
}

/// One evaluated fractional sum with its asymptotic comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FracSumResult {
    pub fn_tag: ArithFn,
    pub x: u64,
    pub exact_sum: i64,
    pub main_term: f64,
    /// `exact_sum − main_term`
    pub error_term: f64,
    /// `error_term / x`
    pub normalized_error: f64,
    pub strategy: Strategy,
}

impl FracSumResult {
    pub fn new(fn_tag: ArithFn, x: u64, exact_sum: i64, strategy: Strategy) -> Self {
        let main = main_term(fn_tag, x);
        let error = exact_sum as f64 - main;
        Self {
            fn_tag,
            x,
            exact_sum,
            main_term: main,
            error_term: error,
            normalized_error: error / x as f64,
            strategy,
        }
    }
}

fn check_x(x: u64) -> Result<()> {
    if x == 0 {
        return Err(invalid("x must be positive"));
    }
    if x >= 1 << 63 {
        return Err(invalid(format!("x = {x} is not below 2^63")));
    }
    Ok(())
}

fn narrow(fn_tag: ArithFn, x: u64, sum: i128) -> Result<i64> {
    i64::try_from(sum).map_err(|_| Error::Overflow(format!("sum of {fn_tag}([x/n]) at x = {x}")))
}

/// `Σ_{n≤x} table[⌊x/n⌋]`, one term per `n`.
pub fn frac_sum_naive(fn_tag: ArithFn, x: u64, table: &ArithmeticTable) -> Result<FracSumResult> {
    check_x(x)?;
    if table.fn_tag() != fn_tag {
        return Err(invalid(format!(
            "table holds {} but {fn_tag} was requested",
            table.fn_tag()
        )));
    }
    if table.limit() < x {
        return Err(invalid(format!(
            "table limit {} is below x = {x}",
            table.limit()
        )));
    }
    let sum: i128 = (1..=x).map(|n| table.get(x / n) as i128).sum();
    Ok(FracSumResult::new(
        fn_tag,
        x,
        narrow(fn_tag, x, sum)?,
        Strategy::Naive,
    ))
}

/// `Σ_blocks f(q)·len`, evaluating `f` pointwise once per quotient block.
///
/// Needs `O(√x)` evaluations and no table, so it reaches `x` far beyond any
/// sieve.
pub fn frac_sum_blocks(fn_tag: ArithFn, x: u64) -> Result<FracSumResult> {
    check_x(x)?;
    let mut sum: i128 = 0;
    for block in quotient_blocks(x)? {
        let v = eval_point(fn_tag, block.q)? as i128;
        sum = sum
            .checked_add(v * block.len() as i128)
            .ok_or_else(|| Error::Overflow(format!("sum of {fn_tag}([x/n]) at x = {x}")))?;
    }
    Ok(FracSumResult::new(
        fn_tag,
        x,
        narrow(fn_tag, x, sum)?,
        Strategy::Blocks,
    ))
}

/// Rounds `S_odd(x) − S_even(x)` to the nearest integer.
///
/// `table_mu` must be a `μ` table covering `x`.
pub fn frac_sum_decomposition(
    fn_tag: ArithFn,
    x: u64,
    table_mu: &ArithmeticTable,
    budget: u64,
) -> Result<FracSumResult> {
    check_x(x)?;
    let (odd, even) = SubSumLabel::pair_for(fn_tag)
        .ok_or_else(|| invalid(format!("no sub-sum decomposition for {fn_tag}")))?;
    let s_odd = sub_sum_with(odd, x, table_mu, Divisibility::Quotient, budget)?.value;
    let s_even = sub_sum_with(even, x, table_mu, Divisibility::Quotient, budget)?.value;
    let diff = s_odd - s_even;
    if !diff.is_finite() || diff.abs() >= i64::MAX as f64 {
        return Err(Error::Overflow(format!("decomposition at x = {x}")));
    }
    Ok(FracSumResult::new(
        fn_tag,
        x,
        diff.round() as i64,
        Strategy::Decomposition,
    ))
}

/// Computes the sum with `strategy`, building whatever table it needs.
pub fn frac_sum(fn_tag: ArithFn, x: u64, strategy: Strategy) -> Result<FracSumResult> {
    match strategy {
        Strategy::Naive => frac_sum_naive(fn_tag, x, &sieve_table(fn_tag, x)?),
        Strategy::Blocks => frac_sum_blocks(fn_tag, x),
        Strategy::Decomposition => {
            if x > DEFAULT_SUBSUM_BUDGET {
                return Err(Error::BudgetExceeded {
                    x,
                    budget: DEFAULT_SUBSUM_BUDGET,
                });
            }
            let mu = sieve_table(ArithFn::Mu, x)?;
            frac_sum_decomposition(fn_tag, x, &mu, DEFAULT_SUBSUM_BUDGET)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(f: ArithFn, x: u64) -> i64 {
        frac_sum_naive(f, x, &sieve_table(f, x).unwrap())
            .unwrap()
            .exact_sum
    }

    #[test]
    fn naive_examples() {
        assert_eq!(naive(ArithFn::Phi, 10), 17);
        assert_eq!(naive(ArithFn::Sigma, 10), 39);
        // brute force: psi(10) + psi(5) + psi(3) + 2 psi(2) + 5 psi(1) = 18 + 6 + 4 + 6 + 5
        assert_eq!(naive(ArithFn::Psi, 10), 39);
    }

    #[test]
    fn blocks_examples() {
        assert_eq!(frac_sum_blocks(ArithFn::Phi, 100).unwrap().exact_sum, 275);
        assert_eq!(
            frac_sum_blocks(ArithFn::Sigma, 1000).unwrap().exact_sum,
            12077
        );
        assert_eq!(frac_sum_blocks(ArithFn::Phi, 1).unwrap().exact_sum, 1);
    }

    #[test]
    fn mu_sums_are_signed() {
        for x in 1..200 {
            assert_eq!(
                frac_sum_blocks(ArithFn::Mu, x).unwrap().exact_sum,
                naive(ArithFn::Mu, x)
            );
            assert_eq!(
                frac_sum_blocks(ArithFn::MuSquared, x).unwrap().exact_sum,
                naive(ArithFn::MuSquared, x)
            );
        }
    }

    #[test]
    fn naive_argument_errors() {
        let t = sieve_table(ArithFn::Phi, 50).unwrap();
        assert!(frac_sum_naive(ArithFn::Phi, 51, &t).is_err());
        assert!(frac_sum_naive(ArithFn::Sigma, 10, &t).is_err());
        assert!(frac_sum_naive(ArithFn::Phi, 0, &t).is_err());
    }

    #[test]
    fn blocks_overflow_is_explicit() {
        // sigma of the first quotient already exceeds 64 bits
        let x = (1u64 << 61) * 3;
        assert!(matches!(
            frac_sum_blocks(ArithFn::Sigma, x),
            Err(Error::Overflow(_))
        ));
        assert!(frac_sum_blocks(ArithFn::Phi, 1 << 63).is_err());
    }

    #[test]
    fn result_fields_consistent() {
        let r = frac_sum_blocks(ArithFn::Phi, 10).unwrap();
        assert_eq!(r.error_term, r.exact_sum as f64 - r.main_term);
        assert_eq!(r.normalized_error, r.error_term / 10.0);
        assert_eq!(r.strategy, Strategy::Blocks);
    }

    #[test]
    fn decomposition_matches() {
        let mu = sieve_table(ArithFn::Mu, 1000).unwrap();
        for f in ArithFn::GROWING {
            for x in [1u64, 2, 10, 99, 1000] {
                let d = frac_sum_decomposition(f, x, &mu, DEFAULT_SUBSUM_BUDGET).unwrap();
                assert_eq!(d.exact_sum, naive(f, x), "{f} at {x}");
            }
        }
        assert!(frac_sum_decomposition(ArithFn::Mu, 10, &mu, DEFAULT_SUBSUM_BUDGET).is_err());
    }

    #[test]
    fn strategy_parsing() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("fast".parse::<Strategy>().is_err());
    }
}
