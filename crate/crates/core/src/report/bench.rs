use std::time::Instant;

use serde::Serialize;

use super::config::{OutputFormat, RunConfig};
use super::format::{json, Grid};
use super::table::compute_one;
use super::{ExitStatus, Report};
use crate::arith::{ArithFn, MAX_SIEVE_LIMIT};
use crate::quotient::Strategy;

/// Wall time of one `(strategy, x)` run, or why it was skipped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    #[serde(rename = "fn")]
    pub fn_tag: ArithFn,
    pub strategy: Strategy,
    pub x: u64,
    pub seconds: Option<f64>,
    pub sum: Option<i64>,
    pub note: String,
}

fn skip_reason(strategy: Strategy, x: u64, budget: u64) -> Option<&'static str> {
    match strategy {
        Strategy::Naive if x > MAX_SIEVE_LIMIT => Some("exceeds sieve budget"),
        Strategy::Decomposition if x > budget => Some("exceeds sub-sum budget"),
        _ => None,
    }
}

/// Times each strategy at each `x`, sequentially so runs do not compete.
///
/// The naive timing includes building its sieve.
pub fn bench_rows(config: &RunConfig) -> Vec<BenchRow> {
    let budget = config.budget();
    let mut rows = Vec::new();
    for &f in &config.fn_tags {
        for x in config.xs.values() {
            for strategy in config.strategy.strategies() {
                if let Some(reason) = skip_reason(strategy, x, budget) {
                    rows.push(BenchRow {
                        fn_tag: f,
                        strategy,
                        x,
                        seconds: None,
                        sum: None,
                        note: format!("skipped: {reason}"),
                    });
                    continue;
                }
                let start = Instant::now();
                let outcome = compute_one(f, x, strategy, budget);
                let seconds = start.elapsed().as_secs_f64();
                rows.push(match outcome {
                    Ok(r) => BenchRow {
                        fn_tag: f,
                        strategy,
                        x,
                        seconds: Some(seconds),
                        sum: Some(r.exact_sum),
                        note: String::new(),
                    },
                    Err(e) => BenchRow {
                        fn_tag: f,
                        strategy,
                        x,
                        seconds: None,
                        sum: None,
                        note: format!("failed: {e}"),
                    },
                });
            }
        }
    }
    rows
}

/// Timing report with columns `fn,strategy,x,seconds,sum,note`.
pub fn cmd_bench(config: &RunConfig) -> Report {
    let rows = bench_rows(config);
    let mut status = ExitStatus::Success;
    let mut diagnostics = Vec::new();
    for w in rows.iter().filter(|r| r.note.starts_with("failed")) {
        status = status.worst(ExitStatus::Resource);
        diagnostics.push(format!("{} {} x={}: {}", w.fn_tag, w.strategy, w.x, w.note));
    }
    // every strategy that ran at the same (fn, x) must agree
    for a in &rows {
        for b in &rows {
            if a.fn_tag == b.fn_tag
                && a.x == b.x
                && a.sum.is_some()
                && b.sum.is_some()
                && a.sum != b.sum
            {
                status = status.worst(ExitStatus::VerificationFailure);
                diagnostics.push(format!(
                    "{} x={}: {} and {} disagree",
                    a.fn_tag, a.x, a.strategy, b.strategy
                ));
            }
        }
    }
    let body = match config.output_format {
        OutputFormat::Json => json(&rows),
        format => {
            let mut grid = Grid::new(&[
                ("fn", false),
                ("strategy", false),
                ("x", true),
                ("seconds", true),
                ("sum", true),
                ("note", false),
            ]);
            for r in &rows {
                grid.push(vec![
                    r.fn_tag.to_string(),
                    r.strategy.to_string(),
                    r.x.to_string(),
                    r.seconds.map(|s| format!("{s:.6}")).unwrap_or_default(),
                    r.sum.map(|s| s.to_string()).unwrap_or_default(),
                    r.note.clone(),
                ]);
            }
            if format == OutputFormat::Markdown {
                grid.markdown()
            } else {
                grid.csv()
            }
        }
    };
    Report {
        body,
        diagnostics,
        status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::config::{Command, StrategyChoice, XsSpec};

    #[test]
    fn naive_skipped_beyond_sieve_budget() {
        let mut c = RunConfig::new(Command::Bench);
        c.xs = XsSpec::List(vec![10_000, 1_000_000_000]);
        c.strategy = StrategyChoice::All;
        let rows = bench_rows(&c);
        let naive_big = rows
            .iter()
            .find(|r| r.strategy == Strategy::Naive && r.x == 1_000_000_000)
            .unwrap();
        assert_eq!(naive_big.note, "skipped: exceeds sieve budget");
        let blocks_big = rows
            .iter()
            .find(|r| r.strategy == Strategy::Blocks && r.x == 1_000_000_000)
            .unwrap();
        assert!(blocks_big.seconds.is_some());
        let small: Vec<_> = rows.iter().filter(|r| r.x == 10_000).collect();
        assert_eq!(small.len(), 3);
        assert!(small.iter().all(|r| r.sum == Some(52201)));
    }
}
