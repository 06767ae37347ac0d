//! Small floating-point helpers shared by the sub-sums and the series code.

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.carry += (self.sum - t) + v;
        } else {
            self.carry += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

impl std::ops::AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, v: f64) {
        self.add(v);
    }
}

/// Formats `v` with `precision` decimals, rounding half away from zero.
///
/// Negative values that round to zero print without a sign.
pub fn format_fixed(v: f64, precision: usize) -> String {
    let scale = 10f64.powi(precision as i32);
    let scaled = (v * scale).round();
    if scaled == 0.0 {
        return if precision == 0 {
            "0".to_string()
        } else {
            format!("0.{}", "0".repeat(precision))
        };
    }
    let neg = scaled < 0.0;
    let digits = format!("{:.0}", scaled.abs());
    let body = if precision == 0 {
        digits
    } else {
        let padded = format!("{:0>width$}", digits, width = precision + 1);
        let (int, frac) = padded.split_at(padded.len() - precision);
        format!("{int}.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut s = CompensatedSum::new();
        s.add(1e16);
        for _ in 0..1000 {
            s.add(1.0);
        }
        s.add(-1e16);
        assert_eq!(s.value(), 1000.0);
    }

    #[test]
    fn fixed_formatting() {
        assert_eq!(format_fixed(13.998, 2), "14.00");
        assert_eq!(format_fixed(-146.4116, 2), "-146.41");
        assert_eq!(format_fixed(-0.004, 2), "0.00");
        assert_eq!(format_fixed(0.05, 1), "0.1");
        assert_eq!(format_fixed(-2.5, 0), "-3");
        assert_eq!(format_fixed(0.001, 2), "0.00");
        assert_eq!(format_fixed(0.07, 2), "0.07");
        assert_eq!(format_fixed(699901.9412, 2), "699901.94");
    }
}
