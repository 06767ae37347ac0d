//! Invariant suites behind `fracsum verify`.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use super::config::{OutputFormat, RunConfig};
use super::format::{json, Grid};
use super::{ExitStatus, Report};
use crate::arith::{divisor_sum_identity, eval_point, sieve_table, ArithFn, ArithmeticTable};
use crate::asymptotics::{partial_series, SeriesKind};
use crate::error::Result;
use crate::quotient::{
    frac_sum_blocks, frac_sum_naive, indicator, quotient_blocks, sub_sum_with, Divisibility,
    SubSumLabel,
};

pub const SUITE_NAMES: [&str; 7] = [
    "strategy agreement",
    "block tiling",
    "identity",
    "pointwise dominance",
    "indicator",
    "decomposition",
    "series convergence",
];

/// Seed of the pseudorandom x sample.
const SAMPLE_SEED: u64 = 0x5eed_f5a1;
const SAMPLE_COUNT: usize = 200;
const SAMPLE_MAX: u64 = 10_000;
const EXHAUSTIVE_MAX: u64 = 300;
const IDENTITY_MAX: u64 = 100_000;

/// A deliberate corruption, for checking that the suites notice it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Adds one to the sieved `σ(at)` used by the naive strategy.
    SigmaOffByOne { at: u64 },
}

#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    pub fault: Option<Fault>,
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub checks: u64,
    /// First failing input, smallest first where the suite is ordered.
    pub counterexample: Option<String>,
    #[serde(skip)]
    pub seconds: f64,
}

struct Suite {
    name: &'static str,
    checks: u64,
    failure: Option<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            failure: None,
        }
    }

    /// Records one check; keeps only the first failure.
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
        ok
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

/// `1..=300` plus 200 seeded pseudorandom values up to `10^4`, ascending.
pub fn agreement_sample() -> Vec<u64> {
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let mut xs: Vec<u64> = (1..=EXHAUSTIVE_MAX).collect();
    xs.extend((0..SAMPLE_COUNT).map(|_| rng.gen_range(EXHAUSTIVE_MAX + 1..=SAMPLE_MAX)));
    xs.sort_unstable();
    xs.dedup();
    xs
}

fn tables(fault: Option<Fault>) -> Result<Vec<ArithmeticTable>> {
    ArithFn::GROWING
        .iter()
        .map(|&f| {
            let t = sieve_table(f, SAMPLE_MAX.max(IDENTITY_MAX))?;
            match fault {
                Some(Fault::SigmaOffByOne { at }) if f == ArithFn::Sigma => t.perturbed(at, 1),
                _ => Ok(t),
            }
        })
        .collect()
}

fn strategy_agreement(tables: &[ArithmeticTable]) -> Result<Suite> {
    let mut s = Suite::new(SUITE_NAMES[0]);
    for x in agreement_sample() {
        for t in tables {
            let f = t.fn_tag();
            let naive = frac_sum_naive(f, x, t)?.exact_sum;
            let blocks = frac_sum_blocks(f, x)?.exact_sum;
            s.check(naive == blocks, || {
                format!("{f} x={x}: naive {naive} != blocks {blocks}")
            });
        }
        if s.failed() {
            break;
        }
    }
    Ok(s)
}

fn block_tiling() -> Result<Suite> {
    let mut s = Suite::new(SUITE_NAMES[1]);
    let sampled = [123_456u64, 999_999, 10_000_019, 1 << 33];
    for x in (1..=SAMPLE_MAX).chain(sampled) {
        let mut next = 1u64;
        let mut count = 0u64;
        let mut ok = true;
        for b in quotient_blocks(x)? {
            ok &= b.n_lo == next && b.n_hi >= b.n_lo && x / b.n_lo == b.q && x / b.n_hi == b.q;
            ok &= b.n_hi == x || x / (b.n_hi + 1) < b.q;
            next = b.n_hi + 1;
            count += 1;
        }
        let root = (x as f64).sqrt().floor() as u64;
        ok &= next == x + 1 && count <= 2 * root;
        if !s.check(ok, || format!("x={x}: blocks do not tile [1, x]")) {
            break;
        }
    }
    Ok(s)
}

fn identity(tables: &[ArithmeticTable]) -> Result<Suite> {
    let mut s = Suite::new(SUITE_NAMES[2]);
    for n in 1..=IDENTITY_MAX {
        for t in tables {
            let f = t.fn_tag();
            let point = eval_point(f, n)?;
            let ident = divisor_sum_identity(f, n)?;
            let sieved = t.get(n);
            s.check(point == ident && ident == sieved, || {
                format!("{f}({n}): point {point}, identity {ident}, sieve {sieved}")
            });
        }
        if s.failed() {
            break;
        }
    }
    Ok(s)
}

fn dominance(tables: &[ArithmeticTable]) -> Result<Suite> {
    let mut s = Suite::new(SUITE_NAMES[3]);
    let mu = sieve_table(ArithFn::Mu, IDENTITY_MAX)?;
    let (phi, psi, sigma) = (&tables[0], &tables[1], &tables[2]);
    for n in 1..=IDENTITY_MAX {
        let (a, b, c) = (phi.get(n), psi.get(n), sigma.get(n));
        let squarefree = mu.get(n) != 0;
        let ok = a <= b && b <= c && (b == c) == squarefree;
        if !s.check(ok, || {
            format!("n={n}: phi {a}, psi {b}, sigma {c}, squarefree {squarefree}")
        }) {
            break;
        }
    }
    Ok(s)
}

fn indicator_suite() -> Result<Suite> {
    let mut s = Suite::new(SUITE_NAMES[4]);
    for d in 1..=50u64 {
        for m in 0..=500u64 {
            let got = indicator(d, m);
            let want = u8::from(m % d == 0);
            s.check(got.as_ref() == Ok(&want), || {
                format!("d={d}, m={m}: exponential sum gives {got:?}, expected {want}")
            });
        }
    }
    Ok(s)
}

fn decomposition(tables: &[ArithmeticTable], budget: u64) -> Result<Suite> {
    let mut s = Suite::new(SUITE_NAMES[5]);
    let mut xs = agreement_sample();
    xs.retain(|&x| x <= budget);
    let extended = budget.min(crate::arith::MAX_SIEVE_LIMIT);
    if !xs.contains(&extended) {
        xs.push(extended);
    }
    let mu = sieve_table(ArithFn::Mu, *xs.iter().max().unwrap_or(&1))?;
    let own_tables: Vec<ArithmeticTable>;
    let tables = if xs.iter().all(|&x| x <= tables[0].limit()) {
        tables
    } else {
        own_tables = tables
            .iter()
            .map(|t| sieve_table(t.fn_tag(), extended))
            .collect::<Result<_>>()?;
        &own_tables[..]
    };
    for x in xs {
        for t in tables {
            let f = t.fn_tag();
            let (odd, even) = SubSumLabel::pair_for(f).expect("growing functions decompose");
            let exact = frac_sum_naive(f, x, t)?.exact_sum as f64;
            let s_odd = sub_sum_with(odd, x, &mu, Divisibility::Quotient, budget)?.value;
            let s_even = sub_sum_with(even, x, &mu, Divisibility::Quotient, budget)?.value;
            let gap = (exact - (s_odd - s_even)).abs();
            s.check(gap < 1e-4 * x as f64, || {
                format!("{f} x={x}: |sum - ({odd} - {even})| = {gap:e}")
            });
        }
        if s.failed() {
            break;
        }
    }
    Ok(s)
}

fn series_convergence() -> Result<Suite> {
    let mut s = Suite::new(SUITE_NAMES[6]);
    let limits = [1_000u64, 10_000, 100_000];
    for kind in SeriesKind::ALL {
        if kind == SeriesKind::MuOverN {
            let mags: Vec<f64> = limits
                .iter()
                .map(|&l| partial_series(kind, l).map(|v| v.0.abs()))
                .collect::<Result<_>>()?;
            s.check(mags.windows(2).all(|w| w[1] < w[0]), || {
                format!("{kind}: |partial sums| {mags:?} do not shrink")
            });
            continue;
        }
        for l in limits {
            let (v1, tail) = partial_series(kind, l)?;
            let (v2, _) = partial_series(kind, 2 * l)?;
            let shift = if kind == SeriesKind::Harmonic {
                (2.0 * l as f64).ln() - (l as f64).ln()
            } else {
                0.0
            };
            let diff = (v2 - v1 - shift).abs();
            s.check(diff <= tail, || {
                format!("{kind} L={l}: |S(2L) - S(L)| = {diff:e} exceeds tail bound {tail:e}")
            });
        }
    }
    Ok(s)
}

fn timed(f: impl FnOnce() -> Result<Suite>) -> SuiteOutcome {
    let start = Instant::now();
    let (name, checks, counterexample) = match f() {
        Ok(s) => (s.name, s.checks, s.failure),
        Err(e) => ("", 0, Some(format!("error: {e}"))),
    };
    SuiteOutcome {
        name,
        passed: counterexample.is_none(),
        checks,
        counterexample,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Runs all seven suites in order.
pub fn run_suites(options: &VerifyOptions) -> Vec<SuiteOutcome> {
    let budget = options
        .budget
        .unwrap_or(crate::quotient::DEFAULT_SUBSUM_BUDGET);
    let tables = match tables(options.fault) {
        Ok(t) => t,
        Err(e) => {
            return SUITE_NAMES
                .iter()
                .map(|&name| SuiteOutcome {
                    name,
                    passed: false,
                    checks: 0,
                    counterexample: Some(format!("error: {e}")),
                    seconds: 0.0,
                })
                .collect()
        }
    };
    let mut out = vec![
        timed(|| strategy_agreement(&tables)),
        timed(block_tiling),
        timed(|| identity(&tables)),
        timed(|| dominance(&tables)),
        timed(indicator_suite),
        timed(|| decomposition(&tables, budget)),
        timed(series_convergence),
    ];
    for (o, name) in out.iter_mut().zip(SUITE_NAMES) {
        o.name = name;
    }
    out
}

#[derive(Serialize)]
struct Summary<'a> {
    passed: bool,
    suites: &'a [SuiteOutcome],
}

/// Runs every suite; exit status 1 if any fails.
///
/// With a budget override the decomposition suite is extended to that budget
/// and per-suite runtimes are appended.
pub fn cmd_verify(config: &RunConfig) -> Report {
    cmd_verify_with(
        config,
        &VerifyOptions {
            fault: None,
            budget: config.budget_override,
        },
    )
}

pub fn cmd_verify_with(config: &RunConfig, options: &VerifyOptions) -> Report {
    let outcomes = run_suites(options);
    let failed: Vec<&SuiteOutcome> = outcomes.iter().filter(|o| !o.passed).collect();
    let status = if failed.is_empty() {
        ExitStatus::Success
    } else {
        ExitStatus::VerificationFailure
    };
    let headline = if failed.is_empty() {
        format!("all {} suites passed", outcomes.len())
    } else {
        format!("{} of {} suites failed", failed.len(), outcomes.len())
    };
    let with_times = options.budget.is_some();

    let body = match config.output_format {
        OutputFormat::Json => json(&Summary {
            passed: failed.is_empty(),
            suites: &outcomes,
        }),
        format => {
            let mut cols = vec![
                ("suite", false),
                ("result", false),
                ("checks", true),
                ("counterexample", false),
            ];
            if with_times {
                cols.push(("seconds", true));
            }
            let mut grid = Grid::new(&cols);
            for o in &outcomes {
                let mut row = vec![
                    o.name.to_string(),
                    if o.passed { "pass" } else { "FAIL" }.to_string(),
                    o.checks.to_string(),
                    o.counterexample.clone().unwrap_or_default(),
                ];
                if with_times {
                    row.push(format!("{:.3}", o.seconds));
                }
                grid.push(row);
            }
            if format == OutputFormat::Csv {
                grid.csv()
            } else {
                format!("{}\n{headline}\n", grid.markdown())
            }
        }
    };
    let mut diagnostics: Vec<String> = failed
        .iter()
        .map(|o| {
            format!(
                "{} failed: {}",
                o.name,
                o.counterexample.as_deref().unwrap_or("")
            )
        })
        .collect();
    diagnostics.push(headline);
    Report {
        body,
        diagnostics,
        status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_is_deterministic_and_bounded() {
        let a = agreement_sample();
        assert_eq!(a, agreement_sample());
        assert!(a.iter().all(|&x| (1..=SAMPLE_MAX).contains(&x)));
        assert!(a.len() > 300 + 150);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn indicator_and_series_suites_pass() {
        assert!(indicator_suite().unwrap().failure.is_none());
        assert!(series_convergence().unwrap().failure.is_none());
        assert!(block_tiling().unwrap().failure.is_none());
    }

    #[test]
    fn injected_fault_is_located() {
        let t = tables(Some(Fault::SigmaOffByOne { at: 97 })).unwrap();
        let s = strategy_agreement(&t).unwrap();
        let msg = s.failure.unwrap();
        assert!(msg.starts_with("sigma x=97:"), "{msg}");
    }
}
