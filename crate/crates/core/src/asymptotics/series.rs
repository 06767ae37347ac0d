//! Partial sums of the convergent series behind the main-term constants.
//!
//! Each partial sum comes with a tail bound `|limit − partial| ≤ tail`:
//!
//! | kind          | limit              | tail bound at `L`         |
//! |---------------|--------------------|---------------------------|
//! | `OneOverN2`   | `ζ(2)`             | `2/L`                     |
//! | `MuOverN2`    | `1/ζ(2)`           | `2/L`                     |
//! | `Mu2OverN2`   | `ζ(2)/ζ(4)`        | `2/L`                     |
//! | `LogOverN2`   | `−ζ′(2)`           | `2(1 + ln L)/L`           |
//! | `MuLogOverN2` | `ζ′(2)/ζ(2)²`      | `2(1 + ln L)/L`           |
//! | `MuOverN`     | `0`                | `2·exp(−√ln L)`, heuristic |
//! | `Harmonic`    | `ln L + γ`         | `1/L`                     |
//!
//! The first five follow from `Σ_{n>L} 1/n² < 1/L` and
//! `Σ_{n>L} ln n/n² < (1 + ln L)/L`. The `MuOverN` bound has the shape of the
//! prime-number-theorem error but carries no proven constant. For `Harmonic`
//! the tail bound applies to `H_L − ln L − γ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::constants::SeriesConstants;
use crate::arith::{sieve_table, ArithFn};
use crate::error::{invalid, Error, Result};
use crate::numeric::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesKind {
    MuOverN2,
    Mu2OverN2,
    OneOverN2,
    LogOverN2,
    MuLogOverN2,
    MuOverN,
    Harmonic,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 7] = [
        Self::MuOverN2,
        Self::Mu2OverN2,
        Self::OneOverN2,
        Self::LogOverN2,
        Self::MuLogOverN2,
        Self::MuOverN,
        Self::Harmonic,
    ];

    /// Value the partial sums converge to; `None` for the divergent harmonic sum.
    pub fn limit(self, c: &SeriesConstants) -> Option<f64> {
        match self {
            Self::MuOverN2 => Some(c.inv_zeta2),
            Self::Mu2OverN2 => Some(c.zeta2_over_zeta4),
            Self::OneOverN2 => Some(c.zeta2),
            Self::LogOverN2 => Some(c.neg_zeta_prime_2),
            Self::MuLogOverN2 => Some(c.mu_log_over_n2),
            Self::MuOverN => Some(0.0),
            Self::Harmonic => None,
        }
    }

    fn needs_mu(self) -> bool {
        matches!(
            self,
            Self::MuOverN2 | Self::Mu2OverN2 | Self::MuLogOverN2 | Self::MuOverN
        )
    }

    pub fn tail_bound(self, limit: u64) -> f64 {
        let l = limit as f64;
        match self {
            Self::MuOverN2 | Self::Mu2OverN2 | Self::OneOverN2 => 2.0 / l,
            Self::LogOverN2 | Self::MuLogOverN2 => 2.0 * (1.0 + l.ln()) / l,
            Self::MuOverN => 2.0 * (-l.ln().sqrt()).exp(),
            Self::Harmonic => 1.0 / l,
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| invalid(format!("unknown series '{s}'")))
    }
}

/// Compensated partial sum of `kind` over `n ≤ limit`, with its tail bound.
pub fn partial_series(kind: SeriesKind, limit: u64) -> Result<(f64, f64)> {
    if limit == 0 {
        return Err(invalid("series limit must be positive"));
    }
    let mu = if kind.needs_mu() {
        Some(sieve_table(ArithFn::Mu, limit)?)
    } else {
        None
    };
    let mut sum = CompensatedSum::new();
    for n in 1..=limit {
        let nf = n as f64;
        let m = mu.as_ref().map_or(1, |t| t.get(n)) as f64;
        let term = match kind {
            SeriesKind::MuOverN2 => m / (nf * nf),
            SeriesKind::Mu2OverN2 => m * m / (nf * nf),
            SeriesKind::OneOverN2 => 1.0 / (nf * nf),
            SeriesKind::LogOverN2 => nf.ln() / (nf * nf),
            SeriesKind::MuLogOverN2 => m * nf.ln() / (nf * nf),
            SeriesKind::MuOverN => m / nf,
            SeriesKind::Harmonic => 1.0 / nf,
        };
        sum.add(term);
    }
    Ok((sum.value(), kind.tail_bound(limit)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_minus_log_approaches_gamma() {
        let (h, tail) = partial_series(SeriesKind::Harmonic, 1_000_000).unwrap();
        let l = 1e6f64;
        assert!((h - l.ln() - 0.5772157).abs() < 1e-5);
        assert_eq!(tail, 1e-6);
        // H_n − ln n − 1/(2n) is γ to O(1/n²)
        assert!((h - l.ln() - 0.5 / l - SeriesConstants::new().euler_gamma).abs() < 1e-11);
    }

    #[test]
    fn small_limits() {
        assert_eq!(partial_series(SeriesKind::OneOverN2, 1).unwrap().0, 1.0);
        assert_eq!(partial_series(SeriesKind::MuOverN2, 2).unwrap().0, 0.75);
        assert_eq!(partial_series(SeriesKind::LogOverN2, 1).unwrap().0, 0.0);
        assert!(partial_series(SeriesKind::Harmonic, 0).is_err());
    }

    #[test]
    fn limits_within_tail_bounds() {
        let c = SeriesConstants::new();
        for kind in SeriesKind::ALL {
            for limit in [10u64, 1000, 100_000] {
                let (v, tail) = partial_series(kind, limit).unwrap();
                if let Some(lim) = kind.limit(&c) {
                    assert!((v - lim).abs() <= tail, "{kind} at {limit}: {v} vs {lim}");
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for k in SeriesKind::ALL {
            assert_eq!(k.to_string().parse::<SeriesKind>().unwrap(), k);
        }
    }
}
