use rayon::prelude::*;
use serde::Serialize;

use super::config::{OutputFormat, RunConfig};
use super::format::{json, notes_footer, Grid};
use super::{golden, ExitStatus, Report};
use crate::arith::{sieve_table, ArithFn, MAX_SIEVE_LIMIT};
use crate::error::{Error, Result};
use crate::numeric::format_fixed;
use crate::quotient::{
    frac_sum_blocks, frac_sum_decomposition, frac_sum_naive, FracSumResult, Strategy,
};

/// One `(function, x, strategy)` row, or the reason it could not be computed.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub fn_tag: ArithFn,
    pub x: u64,
    pub strategy: Strategy,
    pub outcome: std::result::Result<FracSumResult, Error>,
}

#[derive(Serialize)]
struct JsonRow {
    #[serde(rename = "fn")]
    fn_tag: ArithFn,
    x: u64,
    sum: Option<i64>,
    main: Option<f64>,
    error: Option<f64>,
    strategy: Strategy,
    #[serde(skip_serializing_if = "Option::is_none")]
    failure: Option<String>,
}

/// Computes one fractional sum with `strategy`, refusing inputs beyond that
/// strategy's capability rather than attempting them.
pub(crate) fn compute_one(
    fn_tag: ArithFn,
    x: u64,
    strategy: Strategy,
    budget: u64,
) -> Result<FracSumResult> {
    match strategy {
        Strategy::Blocks => frac_sum_blocks(fn_tag, x),
        Strategy::Naive => {
            if x > MAX_SIEVE_LIMIT {
                return Err(Error::Resource(format!(
                    "x = {x} exceeds sieve budget of {MAX_SIEVE_LIMIT}"
                )));
            }
            frac_sum_naive(fn_tag, x, &sieve_table(fn_tag, x)?)
        }
        Strategy::Decomposition => {
            if x > budget {
                return Err(Error::BudgetExceeded { x, budget });
            }
            let mu = sieve_table(ArithFn::Mu, x)?;
            frac_sum_decomposition(fn_tag, x, &mu, budget)
        }
    }
}

/// All rows of a table run, in `(function, x, strategy)` order.
pub fn compute_rows(config: &RunConfig) -> Vec<TableRow> {
    let mut jobs = Vec::new();
    for &f in &config.fn_tags {
        for x in config.xs.values() {
            for s in config.strategy.strategies() {
                jobs.push((f, x, s));
            }
        }
    }
    let budget = config.budget();
    jobs.par_iter()
        .map(|&(fn_tag, x, strategy)| TableRow {
            fn_tag,
            x,
            strategy,
            outcome: compute_one(fn_tag, x, strategy, budget),
        })
        .collect()
}

/// Reproduces the published tables: `(x, sum, main term, error)` per function.
///
/// Rows that match a published `(function, x)` are compared against it and
/// any difference is listed in the notes. `ψ` rows have no published
/// counterpart and are flagged as extension data.
pub fn cmd_table(config: &RunConfig) -> Report {
    let rows = compute_rows(config);
    let p = config.precision;
    let mut notes = Vec::new();
    let mut status = ExitStatus::Success;

    let mut grid = Grid::new(&[
        ("fn", false),
        ("x", true),
        ("sum", true),
        ("main", true),
        ("error", true),
        ("strategy", false),
    ]);
    let mut json_rows = Vec::new();
    for row in &rows {
        match &row.outcome {
            Ok(r) => {
                grid.push(vec![
                    row.fn_tag.to_string(),
                    row.x.to_string(),
                    r.exact_sum.to_string(),
                    format_fixed(r.main_term, p),
                    format_fixed(r.error_term, p),
                    row.strategy.to_string(),
                ]);
                json_rows.push(JsonRow {
                    fn_tag: row.fn_tag,
                    x: row.x,
                    sum: Some(r.exact_sum),
                    main: Some(rounded(r.main_term, p)),
                    error: Some(rounded(r.error_term, p)),
                    strategy: row.strategy,
                    failure: None,
                });
            }
            Err(e) => {
                grid.push(vec![
                    row.fn_tag.to_string(),
                    row.x.to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                    row.strategy.to_string(),
                ]);
                json_rows.push(JsonRow {
                    fn_tag: row.fn_tag,
                    x: row.x,
                    sum: None,
                    main: None,
                    error: None,
                    strategy: row.strategy,
                    failure: Some(e.to_string()),
                });
                notes.push(format!("{} x={} {}: {e}", row.fn_tag, row.x, row.strategy));
                status = status.worst(ExitStatus::for_error(e));
            }
        }
    }

    // strategies must agree exactly
    for w in rows.windows(2) {
        if let (Ok(a), Ok(b)) = (&w[0].outcome, &w[1].outcome) {
            if a.fn_tag == b.fn_tag && a.x == b.x && a.exact_sum != b.exact_sum {
                notes.push(format!(
                    "{} x={}: {} gives {} but {} gives {}",
                    a.fn_tag, a.x, a.strategy, a.exact_sum, b.strategy, b.exact_sum
                ));
                status = status.worst(ExitStatus::VerificationFailure);
            }
        }
    }

    let mut compared = std::collections::BTreeSet::new();
    for row in &rows {
        if let Ok(r) = &row.outcome {
            if compared.insert((r.fn_tag, r.x)) {
                notes.extend(golden::compare(r));
            }
        }
    }
    if config.fn_tags.contains(&ArithFn::Psi) {
        notes.push("psi rows extend the published tables; their error column is E_psi".into());
    }

    let body = match config.output_format {
        OutputFormat::Markdown => grid.markdown() + &notes_footer(&notes),
        OutputFormat::Csv => grid.csv(),
        OutputFormat::Json => json(&json_rows),
    };
    Report {
        body,
        diagnostics: notes,
        status,
    }
}

pub(crate) fn rounded(v: f64, precision: usize) -> f64 {
    format_fixed(v, precision)
        .parse()
        .expect("fixed-point text parses")
}
