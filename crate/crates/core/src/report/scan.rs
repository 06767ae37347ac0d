use rayon::prelude::*;
use serde::Serialize;

use super::config::{OutputFormat, RunConfig, PUBLISHED_RANGE};
use super::format::{json, notes_footer, Grid};
use super::table::rounded;
use super::{ExitStatus, Report};
use crate::arith::ArithFn;
use crate::error::Result;
use crate::numeric::format_fixed;
use crate::quotient::{frac_sum_blocks, FracSumResult};

#[derive(Serialize)]
struct JsonRow {
    #[serde(rename = "fn")]
    fn_tag: ArithFn,
    x: u64,
    sum: i64,
    main: f64,
    error: f64,
    normalized: f64,
    extension: bool,
}

/// Error terms `E(x)` and `E(x)/x` over the configured grid, with the sign
/// changes seen between consecutive samples.
///
/// Rows with `x` beyond the published range are marked as extension data.
pub fn cmd_scan(config: &RunConfig) -> Result<Report> {
    let xs = config.xs.values();
    let p = config.precision;
    let jobs: Vec<(ArithFn, u64)> = config
        .fn_tags
        .iter()
        .flat_map(|&f| xs.iter().map(move |&x| (f, x)))
        .collect();
    let results: Vec<FracSumResult> = jobs
        .par_iter()
        .map(|&(f, x)| frac_sum_blocks(f, x))
        .collect::<Result<_>>()?;

    let mut grid = Grid::new(&[
        ("fn", false),
        ("x", true),
        ("sum", true),
        ("main", true),
        ("error", true),
        ("normalized", true),
        ("extension", false),
    ]);
    let mut rows = Vec::new();
    for r in &results {
        let ext = r.x > PUBLISHED_RANGE;
        grid.push(vec![
            r.fn_tag.to_string(),
            r.x.to_string(),
            r.exact_sum.to_string(),
            format_fixed(r.main_term, p),
            format_fixed(r.error_term, p),
            format_fixed(r.normalized_error, p + 4),
            if ext { "yes" } else { "no" }.to_string(),
        ]);
        rows.push(JsonRow {
            fn_tag: r.fn_tag,
            x: r.x,
            sum: r.exact_sum,
            main: rounded(r.main_term, p),
            error: rounded(r.error_term, p),
            normalized: rounded(r.normalized_error, p + 4),
            extension: ext,
        });
    }

    let mut notes = Vec::new();
    for &f in &config.fn_tags {
        let series: Vec<&FracSumResult> = results.iter().filter(|r| r.fn_tag == f).collect();
        let changes: Vec<String> = series
            .windows(2)
            .filter(|w| (w[0].error_term > 0.0) != (w[1].error_term > 0.0))
            .map(|w| format!("({}, {})", w[0].x, w[1].x))
            .collect();
        let max_norm = series
            .iter()
            .map(|r| r.normalized_error.abs())
            .fold(0.0, f64::max);
        notes.push(format!(
            "{f}: {} sign change(s){}{}; max |E(x)|/x = {}",
            changes.len(),
            if changes.is_empty() { "" } else { " in " },
            changes.join(", "),
            format_fixed(max_norm, p + 4)
        ));
    }
    if xs.iter().any(|&x| x > PUBLISHED_RANGE) {
        notes.push(format!(
            "rows with x > {PUBLISHED_RANGE} are extension data beyond the published tables"
        ));
    }

    let body = match config.output_format {
        OutputFormat::Markdown => grid.markdown() + &notes_footer(&notes),
        OutputFormat::Csv => grid.csv(),
        OutputFormat::Json => json(&rows),
    };
    Ok(Report {
        body,
        diagnostics: notes,
        status: ExitStatus::Success,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::config::{Command, XsSpec};

    #[test]
    fn phi_scan_reports_sign_change() {
        let mut c = RunConfig::new(Command::Scan);
        c.xs = XsSpec::List(vec![10, 100]);
        let r = cmd_scan(&c).unwrap();
        assert!(
            r.body.contains("phi: 1 sign change(s) in (10, 100)"),
            "{}",
            r.body
        );
    }
}
