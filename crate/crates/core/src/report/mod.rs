//! The `fracsum` subcommands: table reproduction, error scans, verification
//! suites, series constants and benchmarks.
//!
//! Every command returns a [`Report`]: the rendered body plus diagnostics and
//! an [`ExitStatus`]. Apart from benchmark timings, identical configurations
//! produce byte-identical bodies.

mod bench;
mod config;
mod constants;
pub mod format;
pub mod golden;
mod scan;
mod table;
mod verify;

use std::fs;

pub use bench::{bench_rows, cmd_bench, BenchRow};
pub use config::{
    parse_functions, Command, OutputFormat, RunConfig, StrategyChoice, XsSpec, DEFAULT_TABLE_XS,
    PUBLISHED_RANGE,
};
pub use constants::cmd_constants;
pub use scan::cmd_scan;
pub use table::{cmd_table, compute_rows, TableRow};
pub use verify::{
    agreement_sample, cmd_verify, cmd_verify_with, run_suites, Fault, SuiteOutcome, VerifyOptions,
    SUITE_NAMES,
};

use crate::error::{Error, Result};

/// Process exit status of a subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    VerificationFailure,
    InvalidConfig,
    Resource,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            Self::Success => 0,
            Self::VerificationFailure => 1,
            Self::InvalidConfig => 2,
            Self::Resource => 3,
        }
    }

    pub fn for_error(e: &Error) -> Self {
        match e {
            Error::InvalidArgument(_) => Self::InvalidConfig,
            Error::Resource(_) | Error::BudgetExceeded { .. } | Error::Overflow(_) => {
                Self::Resource
            }
            Error::NumericalInstability { .. } => Self::VerificationFailure,
        }
    }

    /// The more severe of two statuses.
    pub fn worst(self, other: Self) -> Self {
        let rank = |s: Self| match s {
            Self::Success => 0,
            Self::Resource => 1,
            Self::VerificationFailure => 2,
            Self::InvalidConfig => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

/// Output of one subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: String,
    /// Messages for stderr; markdown bodies also carry them in a footer.
    pub diagnostics: Vec<String>,
    pub status: ExitStatus,
}

/// Validates `config`, runs its command on a bounded worker pool and, when
/// `output_path` is set, writes the body there.
pub fn run(config: &RunConfig) -> Report {
    if let Err(e) = config.validate() {
        return Report {
            body: String::new(),
            diagnostics: vec![e.to_string()],
            status: ExitStatus::InvalidConfig,
        };
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.workers {
        builder = builder.num_threads(n);
    }
    let report = match builder.build() {
        Ok(pool) => pool.install(|| dispatch(config)),
        Err(e) => Report {
            body: String::new(),
            diagnostics: vec![format!("cannot start worker pool: {e}")],
            status: ExitStatus::Resource,
        },
    };
    match &config.output_path {
        Some(path) => match fs::write(path, &report.body) {
            Ok(()) => report,
            Err(e) => Report {
                diagnostics: [
                    report.diagnostics,
                    vec![format!("cannot write {}: {e}", path.display())],
                ]
                .concat(),
                status: report.status.worst(ExitStatus::Resource),
                ..report
            },
        },
        None => report,
    }
}

fn dispatch(config: &RunConfig) -> Report {
    let result: Result<Report> = match config.command {
        Command::Table => Ok(cmd_table(config)),
        Command::Scan => cmd_scan(config),
        Command::Verify => Ok(cmd_verify(config)),
        Command::Constants => cmd_constants(config),
        Command::Bench => Ok(cmd_bench(config)),
    };
    result.unwrap_or_else(|e| Report {
        body: String::new(),
        diagnostics: vec![e.to_string()],
        status: ExitStatus::for_error(&e),
    })
}
