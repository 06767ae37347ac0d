use super::factor::{for_each_prime_power, Factorization};
use super::table::prime_power_value;
use super::ArithFn;
use crate::error::{invalid, Error, Result};

/// Evaluates `fn_tag` at `n` (`1 <= n < 2^63`) from its factorization.
///
/// Products are formed in 128-bit arithmetic; a value that does not fit
/// `i64` is reported as [`Error::Overflow`] rather than wrapped.
pub fn eval_point(fn_tag: ArithFn, n: u64) -> Result<i64> {
    let mut acc: Option<i128> = Some(1);
    for_each_prime_power(n, |p, e| {
        acc = acc.and_then(|a| mul_local(fn_tag, a, p, e));
    })?;
    acc.map(|v| v as i64).ok_or_else(|| overflow(fn_tag, n))
}

fn mul_local(fn_tag: ArithFn, acc: i128, p: u64, e: u32) -> Option<i128> {
    let local = match fn_tag {
        ArithFn::Phi | ArithFn::Psi | ArithFn::Sigma => checked_prime_power(fn_tag, p, e)?,
        _ => prime_power_value(fn_tag, p as u128, e),
    };
    acc.checked_mul(local).filter(|v| i64::try_from(*v).is_ok())
}

/// Evaluates `fn_tag` from an existing factorization.
pub fn eval_with(fn_tag: ArithFn, f: &Factorization) -> Result<i64> {
    f.factors()
        .iter()
        .try_fold(1i128, |acc, &(p, e)| mul_local(fn_tag, acc, p, e))
        .map(|v| v as i64)
        .ok_or_else(|| overflow(fn_tag, f.n()))
}

fn overflow(fn_tag: ArithFn, n: u64) -> Error {
    Error::Overflow(format!("{fn_tag}({n}) does not fit in 64 bits"))
}

fn checked_prime_power(fn_tag: ArithFn, p: u64, e: u32) -> Option<i128> {
    let p = p as u128;
    // p^(e+1) <= p * n < 2^126 for n < 2^63, so these never wrap
    let pe1 = p.checked_pow(e - 1)?;
    let v = match fn_tag {
        ArithFn::Phi => pe1 * (p - 1),
        ArithFn::Psi => pe1 * (p + 1),
        ArithFn::Sigma => (pe1.checked_mul(p * p)? - 1) / (p - 1),
        _ => unreachable!(),
    };
    i128::try_from(v).ok()
}

fn trial_mu(mut m: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Computes `f(n) = n · Σ_{d|n} w(d)/d` literally, with `w = μ, μ², 1` for
/// `φ, ψ, σ`.
///
/// Divisors are enumerated by trial up to `sqrt(n)` and `μ` is recomputed by
/// trial division, so nothing is shared with [`eval_point`]. The fractions
/// `w(d)/d` are accumulated over the common denominator `n` and reduced once.
/// Intended as an oracle; cost is `O(sqrt(n))` per call.
pub fn divisor_sum_identity(fn_tag: ArithFn, n: u64) -> Result<i64> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    let weight = |d: u64| -> i128 {
        match fn_tag {
            ArithFn::Phi => trial_mu(d) as i128,
            ArithFn::Psi => trial_mu(d).abs() as i128,
            ArithFn::Sigma => 1,
            _ => 0,
        }
    };
    if !matches!(fn_tag, ArithFn::Phi | ArithFn::Psi | ArithFn::Sigma) {
        return Err(invalid(format!("no divisor-sum identity for {fn_tag}")));
    }

    // Σ w(d)/d = num / den with den = n
    let den = n as i128;
    let mut num: i128 = 0;
    let mut d = 1u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n % d == 0 {
            num += weight(d) * (n / d) as i128;
            let e = n / d;
            if e != d {
                num += weight(e) * d as i128;
            }
        }
        d += 1;
    }
    let g = gcd_u128(num.unsigned_abs(), den as u128) as i128;
    let (num, den) = (num / g, den / g);
    let scaled = (n as i128)
        .checked_mul(num)
        .ok_or_else(|| overflow(fn_tag, n))?;
    if scaled % den != 0 {
        return Err(invalid(format!("{fn_tag}({n}) identity is not integral")));
    }
    i64::try_from(scaled / den).map_err(|_| overflow(fn_tag, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_examples() {
        assert_eq!(eval_point(ArithFn::Phi, 1).unwrap(), 1);
        assert_eq!(eval_point(ArithFn::Sigma, 6).unwrap(), 12);
        assert_eq!(eval_point(ArithFn::Psi, 10).unwrap(), 18);
        assert_eq!(eval_point(ArithFn::Mu, 30).unwrap(), -1);
        assert_eq!(eval_point(ArithFn::Mu, 12).unwrap(), 0);
        assert_eq!(eval_point(ArithFn::MuSquared, 12).unwrap(), 0);
        assert_eq!(eval_point(ArithFn::MuSquared, 1).unwrap(), 1);
    }

    #[test]
    fn identity_examples() {
        assert_eq!(divisor_sum_identity(ArithFn::Phi, 12).unwrap(), 4);
        assert_eq!(divisor_sum_identity(ArithFn::Psi, 12).unwrap(), 24);
        assert_eq!(divisor_sum_identity(ArithFn::Sigma, 12).unwrap(), 28);
        assert_eq!(divisor_sum_identity(ArithFn::Phi, 1).unwrap(), 1);
        assert!(divisor_sum_identity(ArithFn::Mu, 12).is_err());
        assert!(divisor_sum_identity(ArithFn::Phi, 0).is_err());
    }

    #[test]
    fn large_point_values() {
        let p = 1_000_000_007u64;
        assert_eq!(eval_point(ArithFn::Phi, p).unwrap(), (p - 1) as i64);
        assert_eq!(eval_point(ArithFn::Sigma, p).unwrap(), (p + 1) as i64);
        // 2^62: sigma = 2^63 - 1 fits exactly
        assert_eq!(eval_point(ArithFn::Sigma, 1 << 62).unwrap(), i64::MAX);
        assert_eq!(eval_point(ArithFn::Psi, 1 << 62).unwrap(), 3 << 61);
    }

    #[test]
    fn overflow_is_reported() {
        // 2^62 * 3 < 2^63, sigma = (2^63 - 1) * 4 overflows
        let n = (1u64 << 61) * 3;
        assert!(matches!(
            eval_point(ArithFn::Sigma, n),
            Err(Error::Overflow(_))
        ));
        assert!(matches!(
            eval_point(ArithFn::Psi, n),
            Err(Error::Overflow(_))
        ));
        assert_eq!(eval_point(ArithFn::Phi, n).unwrap(), 1 << 61);
    }

    #[test]
    fn eval_with_matches_eval_point() {
        for n in [1u64, 2, 36, 97, 360, 1 << 40, 999_999_999_989 * 3] {
            let f = crate::arith::factorize(n).unwrap();
            for fn_tag in ArithFn::ALL {
                assert_eq!(eval_with(fn_tag, &f), eval_point(fn_tag, n));
            }
        }
    }

    #[test]
    fn zero_rejected() {
        assert!(eval_point(ArithFn::Phi, 0).is_err());
    }
}
