//! Multiplicative arithmetic functions: bulk sieves, factorization and
//! pointwise evaluation.

mod eval;
mod factor;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use eval::{divisor_sum_identity, eval_point, eval_with};
pub use factor::{factorize, is_prime, Factorization, TRIAL_DIVISION_LIMIT};
pub use table::{sieve_table, ArithmeticTable, LINEAR_SIEVE_LIMIT, MAX_SIEVE_LIMIT};

/// The arithmetic functions handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithFn {
    /// Euler totient `φ`.
    Phi,
    /// Dedekind psi `ψ(n) = n·Π(1 + 1/p)`.
    Psi,
    /// Sum of divisors `σ`.
    Sigma,
    /// Möbius `μ`.
    Mu,
    /// Squarefree indicator `μ²`.
    MuSquared,
}

impl ArithFn {
    pub const ALL: [ArithFn; 5] = [Self::Phi, Self::Psi, Self::Sigma, Self::Mu, Self::MuSquared];

    /// The three functions whose fractional sums grow like `x log x`.
    pub const GROWING: [ArithFn; 3] = [Self::Phi, Self::Psi, Self::Sigma];

    pub fn name(self) -> &'static str {
        match self {
            Self::Phi => "phi",
            Self::Psi => "psi",
            Self::Sigma => "sigma",
            Self::Mu => "mu",
            Self::MuSquared => "mu2",
        }
    }

    /// Value at a prime `p`.
    pub fn at_prime(self, p: i64) -> i64 {
        match self {
            Self::Phi => p - 1,
            Self::Psi | Self::Sigma => p + 1,
            Self::Mu => -1,
            Self::MuSquared => 1,
        }
    }
}

impl fmt::Display for ArithFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ArithFn {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi" => Ok(Self::Phi),
            "psi" => Ok(Self::Psi),
            "sigma" => Ok(Self::Sigma),
            "mu" => Ok(Self::Mu),
            "mu2" | "musquared" | "mu_squared" => Ok(Self::MuSquared),
            other => Err(crate::error::invalid(format!("unknown function '{other}'"))),
        }
    }
}
