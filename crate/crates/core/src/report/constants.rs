use serde::Serialize;

use super::config::{OutputFormat, RunConfig};
use super::format::{json, Grid};
use super::{ExitStatus, Report};
use crate::asymptotics::{partial_series, SeriesConstants, SeriesKind};
use crate::error::Result;

#[derive(Serialize)]
struct ConstantRow {
    name: String,
    limit: Option<u64>,
    value: String,
    reference: Option<String>,
    tail_bound: Option<String>,
    provenance: String,
}

fn sci(v: f64) -> String {
    format!("{v:.3e}")
}

/// Reference constants followed by the partial sums at each configured limit.
pub fn cmd_constants(config: &RunConfig) -> Result<Report> {
    let c = SeriesConstants::new();
    let digits = config.precision.max(12);
    let mut rows = Vec::new();
    for e in c.entries() {
        rows.push(ConstantRow {
            name: e.name.to_string(),
            limit: None,
            value: format!("{:.*}", digits, e.value),
            reference: None,
            tail_bound: None,
            provenance: e.provenance.to_string(),
        });
    }
    let mut within = true;
    for limit in config.xs.values() {
        for kind in SeriesKind::ALL {
            let (v, tail) = partial_series(kind, limit)?;
            let (shown, reference, provenance) = match kind.limit(&c) {
                Some(lim) => {
                    within &= (v - lim).abs() <= tail;
                    (v, Some(format!("{:.*}", digits, lim)), "partial sum")
                }
                None => {
                    // compare H_L − ln L against γ
                    let centered = v - (limit as f64).ln();
                    within &= (centered - c.euler_gamma).abs() <= tail;
                    (
                        centered,
                        Some(format!("{:.*}", digits, c.euler_gamma)),
                        "partial sum minus ln L",
                    )
                }
            };
            rows.push(ConstantRow {
                name: kind.to_string(),
                limit: Some(limit),
                value: format!("{:.*}", digits, shown),
                reference,
                tail_bound: Some(sci(tail)),
                provenance: provenance.to_string(),
            });
        }
    }

    let body = match config.output_format {
        OutputFormat::Json => json(&rows),
        format => {
            let mut grid = Grid::new(&[
                ("name", false),
                ("limit", true),
                ("value", true),
                ("reference", true),
                ("tail_bound", true),
                ("provenance", false),
            ]);
            for r in &rows {
                grid.push(vec![
                    r.name.clone(),
                    r.limit.map(|l| l.to_string()).unwrap_or_default(),
                    r.value.clone(),
                    r.reference.clone().unwrap_or_default(),
                    r.tail_bound.clone().unwrap_or_default(),
                    r.provenance.clone(),
                ]);
            }
            if format == OutputFormat::Csv {
                grid.csv()
            } else {
                grid.markdown()
            }
        }
    };
    let status = if within {
        ExitStatus::Success
    } else {
        ExitStatus::VerificationFailure
    };
    Ok(Report {
        body,
        diagnostics: Vec::new(),
        status,
    })
}
