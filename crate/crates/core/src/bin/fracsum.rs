use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fracsum::report::{self, parse_functions, Command, RunConfig};

#[derive(Parser)]
#[command(
    name = "fracsum",
    version,
    about = "Fractional sums of phi, psi and sigma over floor quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// phi, psi, sigma, a comma list, or all
    #[arg(long = "function", global = true)]
    function: Option<String>,

    /// Comma list, a:b:geometric(r) or a:b:linear(k)
    #[arg(long, global = true)]
    xs: Option<String>,

    /// naive, blocks, decomposition or all
    #[arg(long, global = true)]
    strategy: Option<String>,

    /// md, csv or json
    #[arg(long, global = true)]
    format: Option<String>,

    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest x for the quadratic-time sub-sums
    #[arg(long, global = true)]
    budget: Option<u64>,

    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Decimal places for real columns
    #[arg(long, global = true)]
    precision: Option<usize>,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Reproduce the published tables
    Table,
    /// Scan error terms over a grid of x
    Scan,
    /// Run the invariant suites
    Verify,
    /// Print series constants and partial sums
    Constants,
    /// Time the summation strategies
    Bench,
}

fn build_config(cli: &Cli) -> fracsum::Result<RunConfig> {
    let command = match cli.command {
        Cmd::Table => Command::Table,
        Cmd::Scan => Command::Scan,
        Cmd::Verify => Command::Verify,
        Cmd::Constants => Command::Constants,
        Cmd::Bench => Command::Bench,
    };
    let mut config = RunConfig::new(command);
    if let Some(f) = &cli.function {
        config.fn_tags = parse_functions(f)?;
    }
    if let Some(xs) = &cli.xs {
        config.xs = xs.parse()?;
    }
    if let Some(s) = &cli.strategy {
        config.strategy = s.parse()?;
    }
    if let Some(f) = &cli.format {
        config.output_format = f.parse()?;
    }
    config.output_path = cli.out.clone();
    config.budget_override = cli.budget;
    config.workers = cli.workers;
    if let Some(p) = cli.precision {
        config.precision = p;
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match build_config(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("fracsum: {e}");
            return ExitCode::from(report::ExitStatus::InvalidConfig.code() as u8);
        }
    };
    let report = report::run(&config);
    if config.output_path.is_none() {
        let mut stdout = std::io::stdout().lock();
        let _ = stdout.write_all(report.body.as_bytes());
    }
    // markdown bodies already carry their notes
    let quiet = config.output_format == report::OutputFormat::Markdown
        && report.status == report::ExitStatus::Success;
    if !quiet {
        for d in &report.diagnostics {
            eprintln!("fracsum: {d}");
        }
    }
    ExitCode::from(report.status.code() as u8)
}
