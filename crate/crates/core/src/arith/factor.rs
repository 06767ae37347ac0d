//! Prime factorization of 63-bit integers.
//!
//! Inputs below [`TRIAL_DIVISION_LIMIT`] are factored by trial division over a
//! cached prime list. Larger inputs have their small primes stripped the same
//! way, and the remaining cofactor is split with Brent's variant of Pollard rho.
//! Every factor found by rho is certified with a deterministic Miller-Rabin test
//! before it is accepted, and the final product is checked against the input.

use std::sync::OnceLock;

use crate::error::{invalid, Result};

/// Largest input (exclusive) handled purely by trial division.
pub const TRIAL_DIVISION_LIMIT: u64 = 10_000_000;

/// Primes stripped by trial division before Pollard rho takes over.
const SMALL_PRIME_BOUND: u64 = 1 << 10;

/// Prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Builds a factorization from `(prime, exponent)` pairs, checking every
    /// invariant: strictly increasing primes, positive exponents and an exact
    /// product.
    pub fn from_factors(n: u64, factors: Vec<(u64, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("cannot factor 0"));
        }
        let mut product: u128 = 1;
        let mut prev = 1u64;
        for &(p, e) in &factors {
            if p <= prev || e == 0 || !is_prime(p) {
                return Err(invalid(format!("malformed factor ({p}, {e}) for {n}")));
            }
            prev = p;
            for _ in 0..e {
                product = product
                    .checked_mul(p as u128)
                    .filter(|&v| v <= n as u128)
                    .ok_or_else(|| invalid(format!("factors overshoot {n}")))?;
            }
        }
        if product != n as u128 {
            return Err(invalid(format!("factors multiply to {product}, not {n}")));
        }
        Ok(Self { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

/// An odd prime with its inverse modulo 2^64, so that `p | n` can be tested
/// with one multiplication: `n·inv mod 2^64 <= u64::MAX / p`.
#[derive(Debug, Clone, Copy)]
struct Divisor {
    p: u64,
    inv: u64,
    max_quotient: u64,
}

impl Divisor {
    fn new(p: u64) -> Self {
        // Newton iteration for the 2-adic inverse of an odd p
        let mut inv = p;
        for _ in 0..5 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        Self {
            p,
            inv,
            max_quotient: u64::MAX / p,
        }
    }

    /// `Some(n / p)` when `p | n`.
    #[inline]
    fn exact_div(&self, n: u64) -> Option<u64> {
        let q = n.wrapping_mul(self.inv);
        (q <= self.max_quotient).then_some(q)
    }
}

/// Odd primes up to `sqrt(TRIAL_DIVISION_LIMIT)`.
fn small_primes() -> &'static [Divisor] {
    static PRIMES: OnceLock<Vec<Divisor>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = 3163usize;
        let mut composite = vec![false; limit + 1];
        let mut primes = Vec::new();
        for i in 2..=limit {
            if !composite[i] {
                if i > 2 {
                    primes.push(Divisor::new(i as u64));
                }
                let mut j = i * i;
                while j <= limit {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Factors `n` into primes. `n` must satisfy `1 <= n < 2^63`.
pub fn factorize(n: u64) -> Result<Factorization> {
    let mut factors = Vec::new();
    for_each_prime_power(n, |p, e| factors.push((p, e)))?;
    Ok(Factorization { n, factors })
}

/// Calls `visit(p, e)` for each prime power `p^e || n`, in increasing `p`,
/// without allocating.
pub(crate) fn for_each_prime_power(n: u64, mut visit: impl FnMut(u64, u32)) -> Result<()> {
    if n == 0 {
        return Err(invalid("cannot factor 0"));
    }
    if n >= 1 << 63 {
        return Err(invalid(format!("{n} is not below 2^63")));
    }
    let mut product = 1u64;
    let mut emit = |p: u64, e: u32| {
        product *= p.pow(e);
        visit(p, e);
    };

    let mut rest = n;
    let twos = rest.trailing_zeros();
    if twos > 0 {
        emit(2, twos);
        rest >>= twos;
    }
    let bound = if n < TRIAL_DIVISION_LIMIT {
        u64::MAX
    } else {
        SMALL_PRIME_BOUND
    };
    for d in small_primes() {
        if d.p > bound || d.p * d.p > rest {
            break;
        }
        let mut e = 0;
        while let Some(q) = d.exact_div(rest) {
            rest = q;
            e += 1;
        }
        if e > 0 {
            emit(d.p, e);
        }
    }
    if rest > 1 {
        if rest < SMALL_PRIME_BOUND * SMALL_PRIME_BOUND || n < TRIAL_DIVISION_LIMIT {
            // no factor below sqrt(rest) remains
            emit(rest, 1);
        } else {
            // a 63-bit cofactor free of primes below 2^10 has at most 6 factors
            let mut large = [0u64; 8];
            let mut len = 0;
            split_large(rest, &mut large, &mut len);
            let large = &mut large[..len];
            large.sort_unstable();
            let mut i = 0;
            while i < large.len() {
                let j = i + large[i..].iter().take_while(|&&p| p == large[i]).count();
                emit(large[i], (j - i) as u32);
                i = j;
            }
        }
    }
    // Primes came from exhaustive trial division or were certified by
    // Miller-Rabin in split_large; the product is the remaining check.
    assert_eq!(product, n, "factorization of {n} does not multiply back");
    Ok(())
}

fn split_large(n: u64, out: &mut [u64; 8], len: &mut usize) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out[*len] = n;
        *len += 1;
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out, len);
    split_large(n / d, out, len);
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    // Witness set proven sufficient for all n < 2^64 (Jim Sinclair).
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Returns a nontrivial divisor of the odd composite `n`.
fn pollard_brent(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    // Perfect squares stall rho with some seeds; catch them directly.
    let r = isqrt(n);
    if r * r == n {
        return r;
    }
    for c in 1..u64::MAX {
        if let Some(d) = brent_cycle(n, c) {
            return d;
        }
    }
    unreachable!("rho exhausted seeds for {n}")
}

fn brent_cycle(n: u64, c: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |v: u64| (mul_mod(v, v, n) + c) % n;
    let mut y = 2u64;
    let mut x;
    let mut ys = y;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut r = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
        if g == 1 {
            continue;
        }
        if g == n {
            // backtrack one step at a time
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
    }
    (g != n).then_some(g)
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).map_or(true, |v| v > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}
