use std::f64::consts::TAU;

use crate::error::{invalid, Error, Result};

/// Largest distance from 0 or 1 accepted before the float path gives up.
pub const INDICATOR_TOLERANCE: f64 = 1e-6;

/// Divisibility indicator from the exponential sum
/// `(1/d) Σ_{a=0}^{d-1} e^{2πi·a·m/d}`, which is 1 when `d | m` and 0 otherwise.
///
/// The sum is evaluated in floating complex arithmetic (angles reduced mod `d`
/// first). A result farther than [`INDICATOR_TOLERANCE`] from both 0 and 1 is
/// reported as [`Error::NumericalInstability`].
pub fn indicator(d: u64, m: u64) -> Result<u8> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    let r = m % d;
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for a in 0..d {
        let k = ((a as u128 * r as u128) % d as u128) as f64;
        let theta = TAU * k / d as f64;
        re += theta.cos();
        im += theta.sin();
    }
    let re = re / d as f64;
    let im = im / d as f64;
    let dist = |target: f64| ((re - target).powi(2) + im * im).sqrt();
    if dist(1.0) <= INDICATOR_TOLERANCE {
        Ok(1)
    } else if dist(0.0) <= INDICATOR_TOLERANCE {
        Ok(0)
    } else {
        Err(Error::NumericalInstability { d, m, value: re })
    }
}

/// [`indicator`], falling back to `m mod d == 0` when the float sum is unstable.
pub fn indicator_or_exact(d: u64, m: u64) -> Result<u8> {
    match indicator(d, m) {
        Err(Error::NumericalInstability { .. }) => Ok(u8::from(m % d == 0)),
        other => other,
    }
}
