use std::f64::consts::PI;

use serde::Serialize;

/// Reference values of the constants appearing in the main terms and the
/// convergent series used to derive them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesConstants {
    /// `1/ζ(2) = 6/π²`
    pub inv_zeta2: f64,
    /// `ζ(2)/ζ(4) = 15/π²`
    pub zeta2_over_zeta4: f64,
    /// `ζ(2) = π²/6`
    pub zeta2: f64,
    pub euler_gamma: f64,
    /// `−ζ′(2)` (OEIS A073002)
    pub neg_zeta_prime_2: f64,
    /// `Σ μ(n) log n / n² = ζ′(2)/ζ(2)²`
    pub mu_log_over_n2: f64,
}

/// One named constant with the source of its value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantEntry {
    pub name: &'static str,
    pub value: f64,
    pub provenance: &'static str,
}

const NEG_ZETA_PRIME_2: f64 = 0.937_548_254_315_843_753_702_574_094_568;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

impl SeriesConstants {
    pub fn new() -> Self {
        let zeta2 = PI * PI / 6.0;
        let zeta4 = PI.powi(4) / 90.0;
        Self {
            inv_zeta2: 1.0 / zeta2,
            zeta2_over_zeta4: zeta2 / zeta4,
            zeta2,
            euler_gamma: EULER_GAMMA,
            neg_zeta_prime_2: NEG_ZETA_PRIME_2,
            mu_log_over_n2: -NEG_ZETA_PRIME_2 / (zeta2 * zeta2),
        }
    }

    pub fn entries(&self) -> Vec<ConstantEntry> {
        vec![
            ConstantEntry {
                name: "inv_zeta2",
                value: self.inv_zeta2,
                provenance: "closed form 6/pi^2",
            },
            ConstantEntry {
                name: "zeta2_over_zeta4",
                value: self.zeta2_over_zeta4,
                provenance: "closed form (pi^2/6)/(pi^4/90) = 15/pi^2",
            },
            ConstantEntry {
                name: "zeta2",
                value: self.zeta2,
                provenance: "closed form pi^2/6",
            },
            ConstantEntry {
                name: "euler_gamma",
                value: self.euler_gamma,
                provenance: "literature value (OEIS A001620)",
            },
            ConstantEntry {
                name: "neg_zeta_prime_2",
                value: self.neg_zeta_prime_2,
                provenance: "literature value (OEIS A073002)",
            },
            ConstantEntry {
                name: "mu_log_over_n2",
                value: self.mu_log_over_n2,
                provenance: "derived zeta'(2)/zeta(2)^2",
            },
        ]
    }
}

impl Default for SeriesConstants {
    fn default() -> Self {
        Self::new()
    }
}
