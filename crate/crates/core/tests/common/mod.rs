//! Brute-force oracles shared by the integration tests. Deliberately naive:
//! nothing here touches the library's sieve, factorizer or block iterator.
#![allow(dead_code)]

use fracsum::ArithFn;

/// Prime factorization by plain trial division.
pub fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn sigma(n: u64) -> i64 {
    let mut s = 0u64;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            s += d;
            if d * d != n {
                s += n / d;
            }
        }
        d += 1;
    }
    s as i64
}

pub fn phi(n: u64) -> i64 {
    trial_factor(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1)) as i64
}

pub fn psi(n: u64) -> i64 {
    trial_factor(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p + 1)) as i64
}

pub fn mu(n: u64) -> i64 {
    let f = trial_factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn value(f: ArithFn, n: u64) -> i64 {
    match f {
        ArithFn::Phi => phi(n),
        ArithFn::Psi => psi(n),
        ArithFn::Sigma => sigma(n),
        ArithFn::Mu => mu(n),
        ArithFn::MuSquared => mu(n).abs(),
    }
}

/// `Σ_{n ≤ x} f(⌊x/n⌋)` term by term.
pub fn frac_sum(f: ArithFn, x: u64) -> i64 {
    (1..=x).map(|n| value(f, x / n)).sum()
}

/// `S(x)` for every `x ≤ limit` at once, using
/// `S(x) − S(x−1) = Σ_{d | x} (f(d) − f(d−1))`.
pub fn frac_sums_upto(f: ArithFn, limit: u64) -> Vec<i64> {
    let n = limit as usize;
    let vals: Vec<i64> = (0..=limit)
        .map(|k| if k == 0 { 0 } else { value(f, k) })
        .collect();
    let mut delta = vec![0i64; n + 1];
    for d in 1..=n {
        let step = vals[d] - vals[d - 1];
        for m in (d..=n).step_by(d) {
            delta[m] += step;
        }
    }
    let mut out = vec![0i64; n + 1];
    for x in 1..=n {
        out[x] = out[x - 1] + delta[x];
    }
    out
}
