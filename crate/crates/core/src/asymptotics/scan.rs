use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::ArithFn;
use crate::error::{invalid, Result};
use crate::quotient::frac_sum_blocks;

/// Sample grid for an error scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum StepRule {
    /// `k, 2k, 3k, …`
    Linear(u64),
    /// `10, 10r, 10r², …`, rounded to integers.
    Geometric(f64),
}

/// Sampled error terms of one function with the observed sign changes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorScan {
    pub fn_tag: ArithFn,
    /// `(x, E(x)/x)` in increasing `x`.
    pub samples: Vec<(u64, f64)>,
    /// Consecutive sample pairs `(x_i, x_{i+1})` across which `E` changes sign.
    pub sign_changes: Vec<(u64, u64)>,
    pub max_abs_normalized: f64,
}

impl ErrorScan {
    pub fn all_positive(&self) -> bool {
        self.samples.iter().all(|&(_, e)| e > 0.0)
    }
}

/// Grid points of `rule` up to and including `x_max`.
pub fn sample_grid(rule: StepRule, x_max: u64) -> Result<Vec<u64>> {
    match rule {
        StepRule::Linear(0) => Err(invalid("linear step must be positive")),
        StepRule::Linear(k) => Ok((1..=x_max / k).map(|i| i * k).collect()),
        StepRule::Geometric(r) if !(r > 1.0) || !r.is_finite() => {
            Err(invalid(format!("geometric ratio must exceed 1, got {r}")))
        }
        StepRule::Geometric(r) => {
            let mut out: Vec<u64> = Vec::new();
            let mut i = 0;
            loop {
                let x = (10.0 * r.powi(i)).round() as u64;
                if x > x_max {
                    break;
                }
                if out.last() != Some(&x) {
                    out.push(x);
                }
                i += 1;
            }
            Ok(out)
        }
    }
}

/// Evaluates `E(x)` on the grid of `rule` up to `x_max` (`x_max >= 10`).
pub fn error_scan(fn_tag: ArithFn, x_max: u64, rule: StepRule) -> Result<ErrorScan> {
    if x_max < 10 {
        return Err(invalid(format!("x_max must be at least 10, got {x_max}")));
    }
    let grid = sample_grid(rule, x_max)?;
    let results = grid
        .par_iter()
        .map(|&x| frac_sum_blocks(fn_tag, x))
        .collect::<Result<Vec<_>>>()?;

    let samples: Vec<(u64, f64)> = results.iter().map(|r| (r.x, r.normalized_error)).collect();
    let sign_changes = samples
        .windows(2)
        .filter(|w| (w[0].1 > 0.0) != (w[1].1 > 0.0))
        .map(|w| (w[0].0, w[1].0))
        .collect();
    let max_abs_normalized = samples.iter().map(|&(_, e)| e.abs()).fold(0.0, f64::max);
    Ok(ErrorScan {
        fn_tag,
        samples,
        sign_changes,
        max_abs_normalized,
    })
}
