//! The sub-sums obtained by writing `f(q) = q·Σ_{d|q} w(d)/d`, swapping the
//! order of summation and splitting `⌊x/n⌋ = x/n − {x/n}`:
//!
//! ```text
//! S_odd(x)  = x · Σ_{d≤x} w(d)/d · Σ_{n≤x, d | ⌊x/n⌋} 1/n
//! S_even(x) =     Σ_{d≤x} w(d)/d · Σ_{n≤x, d | ⌊x/n⌋} {x/n}
//! ```
//!
//! with `w = μ` for `(S1, S2)`, `w = μ²` for `(S3, S4)` and `w = 1` for
//! `(S5, S6)`, so that `Σ f(⌊x/n⌋) = S_odd − S_even` exactly.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{sieve_table, ArithFn, ArithmeticTable};
use crate::error::{invalid, Error, Result};
use crate::numeric::CompensatedSum;

use super::sums::frac_sum_naive;

/// Default largest `x` accepted by the sub-sum routines.
pub const DEFAULT_SUBSUM_BUDGET: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SubSumLabel {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
}

impl SubSumLabel {
    pub const ALL: [SubSumLabel; 6] = [Self::S1, Self::S2, Self::S3, Self::S4, Self::S5, Self::S6];

    /// `(S_odd, S_even)` whose difference is the fractional sum of `fn_tag`.
    pub fn pair_for(fn_tag: ArithFn) -> Option<(SubSumLabel, SubSumLabel)> {
        match fn_tag {
            ArithFn::Phi => Some((Self::S1, Self::S2)),
            ArithFn::Psi => Some((Self::S3, Self::S4)),
            ArithFn::Sigma => Some((Self::S5, Self::S6)),
            _ => None,
        }
    }

    /// The function whose decomposition this label belongs to.
    pub fn fn_tag(self) -> ArithFn {
        match self {
            Self::S1 | Self::S2 => ArithFn::Phi,
            Self::S3 | Self::S4 => ArithFn::Psi,
            Self::S5 | Self::S6 => ArithFn::Sigma,
        }
    }

    /// Odd labels carry the `x/n` part, even labels the fractional part.
    pub fn is_reciprocal(self) -> bool {
        matches!(self, Self::S1 | Self::S3 | Self::S5)
    }

    fn weight(self, table_mu: &ArithmeticTable, d: u64) -> i64 {
        match self.fn_tag() {
            ArithFn::Phi => table_mu.get(d),
            ArithFn::Psi => table_mu.get(d).abs(),
            _ => 1,
        }
    }
}

impl fmt::Display for SubSumLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Which divisibility condition restricts the inner sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Divisibility {
    /// `d | ⌊x/n⌋`, the condition produced by the summation swap.
    Quotient,
    /// `d | n`, substituting `n = dm`.
    Index,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubSumValue {
    pub label: SubSumLabel,
    pub x: u64,
    pub value: f64,
    pub condition: Divisibility,
}

/// Sub-sum `label` at `x` under the `d | ⌊x/n⌋` condition, within the default budget.
pub fn sub_sum(label: SubSumLabel, x: u64, table_mu: &ArithmeticTable) -> Result<SubSumValue> {
    sub_sum_with(
        label,
        x,
        table_mu,
        Divisibility::Quotient,
        DEFAULT_SUBSUM_BUDGET,
    )
}

/// Sub-sum `label` at `x` under an explicit condition and budget.
///
/// Every nonzero term of the double sum is visited: for each `d`, the indices
/// `n` with `d | ⌊x/n⌋` are enumerated through the quotient ranges
/// `⌊x/(kd+1)⌋ < n ≤ ⌊x/(kd)⌋`, which costs `O(x log x)` overall.
pub fn sub_sum_with(
    label: SubSumLabel,
    x: u64,
    table_mu: &ArithmeticTable,
    condition: Divisibility,
    budget: u64,
) -> Result<SubSumValue> {
    if x == 0 {
        return Err(invalid("x must be positive"));
    }
    if x > budget {
        return Err(Error::BudgetExceeded { x, budget });
    }
    if table_mu.fn_tag() != ArithFn::Mu {
        return Err(invalid(format!(
            "sub-sums need a mu table, got {}",
            table_mu.fn_tag()
        )));
    }
    if table_mu.limit() < x {
        return Err(invalid(format!(
            "mu table limit {} is below x = {x}",
            table_mu.limit()
        )));
    }

    let reciprocal = label.is_reciprocal();
    let term = |n: u64| -> f64 {
        if reciprocal {
            1.0 / n as f64
        } else {
            (x % n) as f64 / n as f64
        }
    };

    let mut outer = CompensatedSum::new();
    for d in 1..=x {
        let w = label.weight(table_mu, d);
        if w == 0 {
            continue;
        }
        let mut inner = CompensatedSum::new();
        match condition {
            Divisibility::Quotient => {
                let mut q = d;
                while q <= x {
                    let n_hi = x / q;
                    let n_lo = x / (q + 1) + 1;
                    for n in n_lo..=n_hi {
                        inner.add(term(n));
                    }
                    q += d;
                }
            }
            Divisibility::Index => {
                let mut n = d;
                while n <= x {
                    inner.add(term(n));
                    n += d;
                }
            }
        }
        outer.add(w as f64 / d as f64 * inner.value());
    }
    let scale = if reciprocal { x as f64 } else { 1.0 };
    Ok(SubSumValue {
        label,
        x,
        value: scale * outer.value(),
        condition,
    })
}

/// `|Σ f(⌊x/n⌋) − (S_odd − S_even)|`, which is pure floating-point rounding.
pub fn decomposition_check(fn_tag: ArithFn, x: u64) -> Result<f64> {
    decomposition_check_budgeted(fn_tag, x, DEFAULT_SUBSUM_BUDGET)
}

pub fn decomposition_check_budgeted(fn_tag: ArithFn, x: u64, budget: u64) -> Result<f64> {
    let (odd, even) = SubSumLabel::pair_for(fn_tag)
        .ok_or_else(|| invalid(format!("no sub-sum decomposition for {fn_tag}")))?;
    if x > budget {
        return Err(Error::BudgetExceeded { x, budget });
    }
    let mu = sieve_table(ArithFn::Mu, x)?;
    let exact = frac_sum_naive(fn_tag, x, &sieve_table(fn_tag, x)?)?.exact_sum;
    let s_odd = sub_sum_with(odd, x, &mu, Divisibility::Quotient, budget)?.value;
    let s_even = sub_sum_with(even, x, &mu, Divisibility::Quotient, budget)?.value;
    Ok((exact as f64 - (s_odd - s_even)).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Literal double loop over every `(d, n)` pair.
    fn literal(label: SubSumLabel, x: u64, condition: Divisibility) -> f64 {
        let mu = sieve_table(ArithFn::Mu, x).unwrap();
        let mut total = 0.0;
        for d in 1..=x {
            let w = label.weight(&mu, d) as f64 / d as f64;
            for n in 1..=x {
                let keep = match condition {
                    Divisibility::Quotient => (x / n) % d == 0,
                    Divisibility::Index => n % d == 0,
                };
                if keep {
                    let t = if label.is_reciprocal() {
                        x as f64 / n as f64
                    } else {
                        (x % n) as f64 / n as f64
                    };
                    total += w * t;
                }
            }
        }
        total
    }

    #[test]
    fn matches_literal_double_loop() {
        for x in [1u64, 2, 7, 10, 36, 100, 257] {
            let mu = sieve_table(ArithFn::Mu, x).unwrap();
            for label in SubSumLabel::ALL {
                for cond in [Divisibility::Quotient, Divisibility::Index] {
                    let fast = sub_sum_with(label, x, &mu, cond, DEFAULT_SUBSUM_BUDGET)
                        .unwrap()
                        .value;
                    let slow = literal(label, x, cond);
                    assert!((fast - slow).abs() < 1e-9, "{label} {cond:?} x = {x}");
                }
            }
        }
    }

    #[test]
    fn s1_minus_s2_at_ten() {
        let mu = sieve_table(ArithFn::Mu, 10).unwrap();
        let s1 = sub_sum(SubSumLabel::S1, 10, &mu).unwrap().value;
        let s2 = sub_sum(SubSumLabel::S2, 10, &mu).unwrap().value;
        assert!((s1 - s2 - 17.0).abs() < 1e-6);
    }

    #[test]
    fn s5_at_one() {
        let mu = sieve_table(ArithFn::Mu, 1).unwrap();
        assert_eq!(sub_sum(SubSumLabel::S5, 1, &mu).unwrap().value, 1.0);
    }

    #[test]
    fn s2_at_hundred_is_bounded() {
        let mu = sieve_table(ArithFn::Mu, 100).unwrap();
        let v = sub_sum(SubSumLabel::S2, 100, &mu).unwrap().value;
        assert!((0.0..=100.0).contains(&v), "S2(100) = {v}");
    }

    #[test]
    fn decomposition_examples() {
        assert!(decomposition_check(ArithFn::Phi, 10).unwrap() < 1e-6);
        assert!(decomposition_check(ArithFn::Sigma, 100).unwrap() < 1e-6);
        assert!(decomposition_check(ArithFn::Psi, 1000).unwrap() < 1e-4);
        assert!(decomposition_check(ArithFn::Mu, 10).is_err());
    }

    #[test]
    fn budget_guard() {
        let mu = sieve_table(ArithFn::Mu, 20).unwrap();
        assert!(matches!(
            sub_sum_with(SubSumLabel::S1, 20, &mu, Divisibility::Quotient, 10),
            Err(Error::BudgetExceeded { x: 20, budget: 10 })
        ));
        assert!(matches!(
            decomposition_check(ArithFn::Phi, DEFAULT_SUBSUM_BUDGET + 1),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn table_preconditions() {
        let mu = sieve_table(ArithFn::Mu, 20).unwrap();
        assert!(sub_sum(SubSumLabel::S1, 21, &mu).is_err());
        let phi = sieve_table(ArithFn::Phi, 20).unwrap();
        assert!(sub_sum(SubSumLabel::S1, 10, &phi).is_err());
        assert!(sub_sum(SubSumLabel::S1, 0, &mu).is_err());
    }

    #[test]
    fn nonnegative_weights_give_nonnegative_sums() {
        let mu = sieve_table(ArithFn::Mu, 2000).unwrap();
        for x in [1u64, 10, 100, 1000, 2000] {
            for label in SubSumLabel::ALL {
                for cond in [Divisibility::Quotient, Divisibility::Index] {
                    let v = sub_sum_with(label, x, &mu, cond, DEFAULT_SUBSUM_BUDGET)
                        .unwrap()
                        .value;
                    assert!(v >= -1e-9, "{label} {cond:?} x = {x}: {v}");
                }
            }
        }
    }
}
