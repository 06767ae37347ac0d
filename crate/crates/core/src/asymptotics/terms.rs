use std::f64::consts::PI;

use crate::arith::ArithFn;
use crate::error::{invalid, Result};
use crate::quotient::{frac_sum_blocks, FracSumResult};

/// Leading coefficient `c_f` in `Σ f(⌊x/n⌋) ~ c_f·x·ln x`.
///
/// `μ` and `μ²` are bounded, so their sums are `O(x)` and the coefficient is 0.
pub fn log_coefficient(fn_tag: ArithFn) -> f64 {
    match fn_tag {
        ArithFn::Phi => 6.0 / (PI * PI),
        ArithFn::Psi => 15.0 / (PI * PI),
        ArithFn::Sigma => PI * PI / 6.0,
        ArithFn::Mu | ArithFn::MuSquared => 0.0,
    }
}

/// `c_f · x · ln x` (natural logarithm).
pub fn main_term(fn_tag: ArithFn, x: u64) -> f64 {
    let x = x as f64;
    log_coefficient(fn_tag) * x * x.ln()
}

/// Recomputes `E(x) = exact_sum − main_term` on `result`, refreshing its
/// main term and normalized error, and returns `E(x)`.
pub fn error_term(result: &mut FracSumResult) -> f64 {
    result.main_term = main_term(result.fn_tag, result.x);
    result.error_term = result.exact_sum as f64 - result.main_term;
    result.normalized_error = result.error_term / result.x as f64;
    result.error_term
}

/// Empirical envelope `(min, max)` of `Σ f(⌊x/n⌋) / (x ln x)` over `xs`.
pub fn bound_fit(fn_tag: ArithFn, xs: &[u64]) -> Result<(f64, f64)> {
    if xs.is_empty() {
        return Err(invalid("bound_fit needs at least one x"));
    }
    if let Some(&x) = xs.iter().find(|&&x| x < 3) {
        return Err(invalid(format!("bound_fit needs x >= 3, got {x}")));
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for &x in xs {
        let sum = frac_sum_blocks(fn_tag, x)?.exact_sum as f64;
        let xf = x as f64;
        let ratio = sum / (xf * xf.ln());
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn main_term_examples() {
        assert!((main_term(ArithFn::Phi, 10) - 14.00).abs() < 0.005);
        assert!((main_term(ArithFn::Sigma, 100) - 757.52).abs() < 0.005);
        assert_eq!(main_term(ArithFn::Phi, 1), 0.0);
        assert_eq!(main_term(ArithFn::Mu, 1000), 0.0);
    }

    #[test]
    fn error_term_examples() {
        let mut r = frac_sum_blocks(ArithFn::Phi, 10).unwrap();
        assert!((error_term(&mut r) - 3.00).abs() < 0.005);
        let mut r = frac_sum_blocks(ArithFn::Sigma, 100_000).unwrap();
        assert!((error_term(&mut r) - 139_776.67).abs() < 0.5);
        let mut r = frac_sum_blocks(ArithFn::Phi, 10_000).unwrap();
        assert!((error_term(&mut r) - -3791.16).abs() < 0.05);
        assert_eq!(r.normalized_error, r.error_term / 10_000.0);
    }

    #[test]
    fn bound_fit_examples() {
        let (a, b) = bound_fit(ArithFn::Phi, &[10, 100, 1000]).unwrap();
        assert!(a >= 0.55 && a <= b);
        let (_, b) = bound_fit(ArithFn::Sigma, &[10, 100, 1000]).unwrap();
        assert!(b <= 1.8);
        assert!(bound_fit(ArithFn::Phi, &[]).is_err());
        assert!(bound_fit(ArithFn::Phi, &[2, 10]).is_err());
    }
}
