//! `recipsum`: exact and asymptotic reciprocal-sum moments from the command line.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use recipsum_core::qseries::DEFAULT_ENUMERATION_CAP;

#[derive(Debug, Parser)]
#[command(name = "recipsum", version, about = "Reciprocal-sum moments of partitions into distinct parts")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Working precision in bits.
    #[arg(long, global = true, env = "RECIPSUM_PRECISION", default_value_t = 192,
          value_parser = clap::value_parser!(u32).range(64..=65536))]
    pub precision: u32,
    /// Significant digits in decimal output.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=10000))]
    pub digits: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the asymptotic sums (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    /// Exact values with n up to this cap are also computed by enumeration
    /// and must agree with the series.
    #[arg(long = "enum-cap", global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    pub enum_cap: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IiMode {
    /// Adaptive quadrature.
    Quadrature,
    /// Leading large-argument term only.
    Leading,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Omega,
    Branch,
    Bessel,
    Alphabeta,
    Lq,
    Bell,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct NList {
    /// Comma-separated list of n.
    #[arg(long, required = true, value_delimiter = ',', num_args = 1..)]
    pub n: Vec<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact s_k(n) from the q-series.
    Exact {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=64))]
        moment: u32,
        #[command(flatten)]
        n: NList,
    },
    /// Asymptotic formula summed over the Farey arcs.
    Asym {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
        moment: u32,
        #[command(flatten)]
        n: NList,
        #[arg(long, value_enum, default_value_t = IiMode::Quadrature)]
        ii: IiMode,
    },
    /// Closed-form main term.
    Mainterm {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
        moment: u32,
        #[command(flatten)]
        n: NList,
    },
    /// Rows of n, exact value, asymptotic value and their ratio minus one.
    Compare {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
        moment: u32,
        #[command(flatten)]
        n: NList,
        #[arg(long, value_enum, default_value_t = IiMode::Quadrature)]
        ii: IiMode,
    },
    /// Run invariant suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// p(n) from the Rademacher series, checked against the recurrence.
    Pn {
        #[command(flatten)]
        n: NList,
        /// Number of terms (default ceil(2 sqrt n)).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        truncation: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli.command, &cli.global) {
        Ok(outcome) => {
            let text = match output::render(&outcome.report, cli.global.format) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    return ExitCode::from(1);
                }
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
