use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::ArithFn;
use crate::error::{invalid, Error, Result};
use crate::quotient::{Strategy, DEFAULT_SUBSUM_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Table,
    Scan,
    Verify,
    Constants,
    Bench,
}

/// Which strategies a command runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StrategyChoice {
    One(Strategy),
    All,
}

impl StrategyChoice {
    pub fn strategies(self) -> Vec<Strategy> {
        match self {
            Self::One(s) => vec![s],
            Self::All => Strategy::ALL.to_vec(),
        }
    }
}

impl FromStr for StrategyChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            Ok(Self::All)
        } else {
            s.parse().map(Self::One)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OutputFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "md" | "markdown" => Ok(Self::Markdown),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(invalid(format!("unknown format '{other}'"))),
        }
    }
}

/// Parses `phi|psi|sigma|all` into a list of functions.
pub fn parse_functions(s: &str) -> Result<Vec<ArithFn>> {
    if s == "all" {
        return Ok(ArithFn::GROWING.to_vec());
    }
    let mut out: Vec<ArithFn> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_>>()?;
    out.dedup();
    Ok(out)
}

/// Sample points, either listed or generated.
///
/// Textual forms: `10,100,1000`, `a:b:geometric(r)` and `a:b:linear(k)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum XsSpec {
    List(Vec<u64>),
    Geometric { start: u64, end: u64, ratio: f64 },
    Linear { start: u64, end: u64, step: u64 },
}

impl XsSpec {
    pub fn values(&self) -> Vec<u64> {
        match *self {
            Self::List(ref v) => v.clone(),
            Self::Geometric { start, end, ratio } => {
                let mut out: Vec<u64> = Vec::new();
                let mut i = 0;
                loop {
                    let x = (start as f64 * ratio.powi(i)).round() as u64;
                    if x > end {
                        break;
                    }
                    if out.last() != Some(&x) {
                        out.push(x);
                    }
                    i += 1;
                }
                out
            }
            Self::Linear { start, end, step } => (start..=end).step_by(step as usize).collect(),
        }
    }
}

impl fmt::Display for XsSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::List(v) => {
                let parts: Vec<String> = v.iter().map(u64::to_string).collect();
                f.write_str(&parts.join(","))
            }
            Self::Geometric { start, end, ratio } => write!(f, "{start}:{end}:geometric({ratio})"),
            Self::Linear { start, end, step } => write!(f, "{start}:{end}:linear({step})"),
        }
    }
}

fn parse_u64(s: &str) -> Result<u64> {
    let t = s.trim().replace('_', "");
    if let Some((m, e)) = t.split_once('e') {
        let m: u64 = m
            .parse()
            .map_err(|_| invalid(format!("bad number '{s}'")))?;
        let e: u32 = e
            .parse()
            .map_err(|_| invalid(format!("bad number '{s}'")))?;
        return 10u64
            .checked_pow(e)
            .and_then(|p| p.checked_mul(m))
            .ok_or_else(|| invalid(format!("number '{s}' too large")));
    }
    t.parse().map_err(|_| invalid(format!("bad number '{s}'")))
}

fn generator_arg<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')
}

impl FromStr for XsSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<&str> = s.split(':').collect();
        let spec = match parts.as_slice() {
            [single] => {
                let v = single
                    .split(',')
                    .map(parse_u64)
                    .collect::<Result<Vec<_>>>()?;
                Self::List(v)
            }
            [a, b, rule] => {
                let (start, end) = (parse_u64(a)?, parse_u64(b)?);
                if let Some(r) = generator_arg(rule, "geometric") {
                    let ratio: f64 = r.parse().map_err(|_| invalid(format!("bad ratio '{r}'")))?;
                    if !(ratio > 1.0) || !ratio.is_finite() {
                        return Err(invalid(format!("geometric ratio must exceed 1, got {r}")));
                    }
                    Self::Geometric { start, end, ratio }
                } else if let Some(k) = generator_arg(rule, "linear") {
                    let step = parse_u64(k)?;
                    if step == 0 {
                        return Err(invalid("linear step must be positive"));
                    }
                    Self::Linear { start, end, step }
                } else {
                    return Err(invalid(format!("unknown generator '{rule}'")));
                }
            }
            _ => return Err(invalid(format!("cannot parse x list '{s}'"))),
        };
        let values = spec.values();
        if values.is_empty() {
            return Err(invalid(format!("x list '{s}' is empty")));
        }
        if values.contains(&0) {
            return Err(invalid("x values must be positive"));
        }
        Ok(spec)
    }
}

/// Everything a `fracsum` subcommand needs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: Command,
    pub fn_tags: Vec<ArithFn>,
    pub xs: XsSpec,
    pub strategy: StrategyChoice,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub budget_override: Option<u64>,
    pub workers: Option<usize>,
    pub precision: usize,
}

pub const DEFAULT_TABLE_XS: [u64; 5] = [10, 100, 1000, 10_000, 100_000];

/// Largest `x` in the published tables; scan rows above it are extension data.
pub const PUBLISHED_RANGE: u64 = 100_000;

impl RunConfig {
    /// Defaults for `command`: `φ` at the published table points, blocks
    /// strategy, markdown (CSV for bench), two decimals.
    pub fn new(command: Command) -> Self {
        let (xs, strategy) = match command {
            Command::Scan => (
                XsSpec::Geometric {
                    start: 10,
                    end: 10_000_000,
                    ratio: 1.5,
                },
                StrategyChoice::One(Strategy::Blocks),
            ),
            Command::Bench => (
                XsSpec::Geometric {
                    start: 10_000,
                    end: 1_000_000_000,
                    ratio: 10.0,
                },
                StrategyChoice::All,
            ),
            Command::Constants => (
                XsSpec::List(vec![1_000_000]),
                StrategyChoice::One(Strategy::Blocks),
            ),
            _ => (
                XsSpec::List(DEFAULT_TABLE_XS.to_vec()),
                StrategyChoice::One(Strategy::Blocks),
            ),
        };
        let output_format = if command == Command::Bench {
            OutputFormat::Csv
        } else {
            OutputFormat::Markdown
        };
        Self {
            command,
            fn_tags: vec![ArithFn::Phi],
            xs,
            strategy,
            output_format,
            output_path: None,
            budget_override: None,
            workers: None,
            precision: 2,
        }
    }

    pub fn budget(&self) -> u64 {
        self.budget_override.unwrap_or(DEFAULT_SUBSUM_BUDGET)
    }

    /// Rejects configurations that cannot run at all.
    pub fn validate(&self) -> Result<()> {
        if self.fn_tags.is_empty() {
            return Err(invalid("no functions selected"));
        }
        if matches!(
            self.command,
            Command::Table | Command::Scan | Command::Bench
        ) {
            if let Some(f) = self.fn_tags.iter().find(|f| !ArithFn::GROWING.contains(f)) {
                return Err(invalid(format!("{f} has no fractional-sum table")));
            }
        }
        if self.budget_override == Some(0) {
            return Err(invalid("budget must be positive"));
        }
        if self.workers == Some(0) {
            return Err(invalid("worker count must be positive"));
        }
        if self.strategy == StrategyChoice::One(Strategy::Decomposition) {
            if let Some(x) = self.xs.values().into_iter().find(|&x| x > self.budget()) {
                return Err(invalid(format!(
                    "decomposition needs every x <= {}, got {x} (raise --budget)",
                    self.budget()
                )));
            }
        }
        if self.command == Command::Bench {
            let xs = self.xs.values();
            if xs.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invalid("bench needs strictly increasing x values"));
            }
        }
        Ok(())
    }
}
