//! Bulk evaluation of an arithmetic function on `[1, N]`.
//!
//! Tables up to [`LINEAR_SIEVE_LIMIT`] entries come from a smallest-prime-factor
//! linear sieve. Larger tables are filled segment by segment from the primes up
//! to `sqrt(N)`, which keeps the working memory at one segment plus the output.
//!
//! Memory budget: [`MAX_SIEVE_LIMIT`] entries. `φ, ψ, σ` are stored as `u32`
//! (4 bytes per entry, 2 GB at the budget) and `μ, μ²` as `i8`.

use super::factor::isqrt;
use super::ArithFn;
use crate::error::{invalid, Error, Result};

/// Largest table built with the linear sieve; above this the segmented sieve is used.
pub const LINEAR_SIEVE_LIMIT: u64 = 10_000_000;

/// Largest table size accepted by [`sieve_table`].
pub const MAX_SIEVE_LIMIT: u64 = 500_000_000;

const SEGMENT_LEN: usize = 1 << 18;

#[derive(Debug, Clone, PartialEq)]
enum Values {
    Wide(Vec<u32>),
    Signed(Vec<i8>),
}

/// Sieved values of one arithmetic function on `[1, limit]`.
///
/// Immutable once built; index 0 is unused.
#[derive(Debug, Clone, PartialEq)]
pub struct ArithmeticTable {
    fn_tag: ArithFn,
    limit: u64,
    values: Values,
}

impl ArithmeticTable {
    pub fn fn_tag(&self) -> ArithFn {
        self.fn_tag
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// `f(n)` for `1 <= n <= limit`.
    ///
    /// # Panics
    ///
    /// Panics if `n` is 0 or above the table limit.
    #[inline]
    pub fn get(&self, n: u64) -> i64 {
        assert!(
            n >= 1 && n <= self.limit,
            "{n} outside table [1, {}]",
            self.limit
        );
        match &self.values {
            Values::Wide(v) => v[n as usize] as i64,
            Values::Signed(v) => v[n as usize] as i64,
        }
    }

    pub fn try_get(&self, n: u64) -> Option<i64> {
        (n >= 1 && n <= self.limit).then(|| self.get(n))
    }

    /// Iterates `(n, f(n))` over the whole table.
    pub fn iter(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        (1..=self.limit).map(move |n| (n, self.get(n)))
    }

    /// Copy of this table with `delta` added to the entry at `n`.
    ///
    /// Used by fault-injection harnesses to check that verification suites
    /// catch a corrupted table.
    pub fn perturbed(&self, n: u64, delta: i64) -> Result<Self> {
        if n == 0 || n > self.limit {
            return Err(invalid(format!("{n} outside table [1, {}]", self.limit)));
        }
        let mut out = self.clone();
        let bad = || invalid(format!("perturbed value at {n} does not fit the table"));
        match &mut out.values {
            Values::Wide(v) => {
                v[n as usize] = u32::try_from(v[n as usize] as i64 + delta).map_err(|_| bad())?
            }
            Values::Signed(v) => {
                v[n as usize] = i8::try_from(v[n as usize] as i64 + delta).map_err(|_| bad())?
            }
        }
        Ok(out)
    }
}

/// `f(p^e)` for a prime power, in 128-bit arithmetic.
pub(crate) fn prime_power_value(fn_tag: ArithFn, p: u128, e: u32) -> i128 {
    debug_assert!(e >= 1);
    let pe1 = p.pow(e - 1);
    (match fn_tag {
        ArithFn::Phi => pe1 * (p - 1),
        ArithFn::Psi => pe1 * (p + 1),
        ArithFn::Sigma => (pe1 * p * p - 1) / (p - 1),
        ArithFn::Mu => return if e == 1 { -1 } else { 0 },
        ArithFn::MuSquared => return if e == 1 { 1 } else { 0 },
    }) as i128
}

fn alloc<T: Clone>(len: usize, fill: T) -> Result<Vec<T>> {
    let mut v = Vec::new();
    v.try_reserve_exact(len)
        .map_err(|e| Error::Resource(format!("cannot allocate {len} table entries: {e}")))?;
    v.resize(len, fill);
    Ok(v)
}

/// Evaluates `fn_tag` at every `n` in `[1, limit]`.
pub fn sieve_table(fn_tag: ArithFn, limit: u64) -> Result<ArithmeticTable> {
    if limit == 0 {
        return Err(invalid("sieve limit must be positive"));
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(Error::Resource(format!(
            "sieve limit {limit} exceeds the memory budget of {MAX_SIEVE_LIMIT} entries"
        )));
    }
    if limit <= LINEAR_SIEVE_LIMIT {
        linear_sieve(fn_tag, limit)
    } else {
        segmented_sieve(fn_tag, limit, SEGMENT_LEN)
    }
}

fn new_values(fn_tag: ArithFn, len: usize) -> Result<Values> {
    Ok(match fn_tag {
        ArithFn::Mu | ArithFn::MuSquared => Values::Signed(alloc(len, 0i8)?),
        _ => Values::Wide(alloc(len, 0u32)?),
    })
}

fn store(values: &mut Values, n: usize, v: i128) -> Result<()> {
    let overflow = || Error::Overflow(format!("value {v} at {n} does not fit the table"));
    match values {
        Values::Wide(vals) => vals[n] = u32::try_from(v).map_err(|_| overflow())?,
        Values::Signed(vals) => vals[n] = i8::try_from(v).map_err(|_| overflow())?,
    }
    Ok(())
}

fn load(values: &Values, n: usize) -> i128 {
    match values {
        Values::Wide(v) => v[n] as i128,
        Values::Signed(v) => v[n] as i128,
    }
}

fn linear_sieve(fn_tag: ArithFn, limit: u64) -> Result<ArithmeticTable> {
    let len = limit as usize + 1;
    // smallest prime factor, and the full power of it dividing n
    let mut spf = alloc(len, 0u32)?;
    let mut spf_power = alloc(len, 0u32)?;
    let mut primes: Vec<u32> = Vec::new();
    let mut values = new_values(fn_tag, len)?;
    store(&mut values, 1, 1)?;

    for i in 2..len {
        if spf[i] == 0 {
            spf[i] = i as u32;
            spf_power[i] = i as u32;
            primes.push(i as u32);
        }
        let p = spf[i];
        for &q in &primes {
            let m = i * q as usize;
            if q > p || m >= len {
                break;
            }
            spf[m] = q;
            spf_power[m] = if q == p { spf_power[i] * q } else { q };
        }

        let pw = spf_power[i] as usize;
        let v = if pw == i {
            let mut e = 0;
            let mut t = i;
            while t > 1 {
                t /= p as usize;
                e += 1;
            }
            prime_power_value(fn_tag, p as u128, e)
        } else {
            load(&values, i / pw) * load(&values, pw)
        };
        store(&mut values, i, v)?;
    }

    Ok(ArithmeticTable {
        fn_tag,
        limit,
        values,
    })
}

fn segmented_sieve(fn_tag: ArithFn, limit: u64, segment_len: usize) -> Result<ArithmeticTable> {
    let root = isqrt(limit) as usize;
    let base_primes: Vec<u64> = {
        let mut composite = vec![false; root + 1];
        let mut out = Vec::new();
        for i in 2..=root {
            if !composite[i] {
                out.push(i as u64);
                let mut j = i * i;
                while j <= root {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        out
    };

    let mut values = new_values(fn_tag, limit as usize + 1)?;
    let mut rest = vec![0u64; segment_len];
    let mut acc = vec![0i128; segment_len];

    let mut lo = 1u64;
    while lo <= limit {
        let hi = (lo + segment_len as u64 - 1).min(limit);
        let width = (hi - lo + 1) as usize;
        for (k, r) in rest[..width].iter_mut().enumerate() {
            *r = lo + k as u64;
        }
        acc[..width].fill(1);

        for &p in &base_primes {
            let first = lo.div_ceil(p) * p;
            let mut m = first;
            while m <= hi {
                let k = (m - lo) as usize;
                let mut e = 0;
                while rest[k] % p == 0 {
                    rest[k] /= p;
                    e += 1;
                }
                acc[k] *= prime_power_value(fn_tag, p as u128, e);
                m += p;
            }
        }
        for k in 0..width {
            if rest[k] > 1 {
                // leftover is a single prime above sqrt(limit)
                acc[k] *= prime_power_value(fn_tag, rest[k] as u128, 1);
            }
            store(&mut values, (lo + k as u64) as usize, acc[k])?;
        }
        lo = hi + 1;
    }

    Ok(ArithmeticTable {
        fn_tag,
        limit,
        values,
    })
}
