//! `gbo`: command-line front end to the optimizer and the experiment harness.
//!
//! Exit codes: 0 success, 1 usage or runtime error, 2 a safety budget cut a
//! run short, 3 some runs in a batch failed.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gbo_core::FunctionId;
use gbo_harness::Algorithm;

#[derive(Debug, Parser)]
#[command(
    name = "gbo",
    version,
    about = "Granular-ball optimization over the twenty-function benchmark suite"
)]
#[command(args_conflicts_with_subcommands = true)]
pub struct Cli {
    /// Print the function registry and exit.
    #[arg(long)]
    list_functions: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One optimizer run on one function.
    Run(RunArgs),
    /// Repeated runs of several algorithms on several functions.
    Compare(CompareArgs),
    /// Ten-repeat error series on f3, f4, f5 and f11.
    Stability(StabilityArgs),
    /// Print the function registry.
    ListFunctions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Basic,
    Prime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OobArg {
    Clamp,
    Raw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SplitArg {
    Own,
    Every,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RadiusArg {
    Euclidean,
    Root,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Markdown,
    Json,
}

/// Optimizer settings shared by every subcommand.
#[derive(Debug, Args)]
pub struct GboArgs {
    /// Ball evaluation: own boundary points only, or also prime-radius shells.
    #[arg(long, value_enum, default_value_t = ModeArg::Prime)]
    mode: ModeArg,
    /// Out-of-box boundary points: clamp into the box, or evaluate as is.
    #[arg(long, value_enum, default_value_t = OobArg::Clamp)]
    oob: OobArg,
    /// Which shells get split: the ball's own, or every shell that scored it.
    #[arg(long, value_enum, default_value_t = SplitArg::Every)]
    split: SplitArg,
    /// Covering-ball radius: Euclidean norm or d-th root of the squared norm.
    #[arg(long, value_enum, default_value_t = RadiusArg::Root)]
    radius: RadiusArg,
    /// Distinct evaluations before a run is cut short.
    #[arg(long, default_value_t = 10_000_000)]
    max_evaluations: u64,
    /// Splitting rounds before a run is cut short.
    #[arg(long, default_value_t = 64)]
    max_rounds: u32,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    /// Function id, f1 to f20.
    #[arg(long, short)]
    function: String,
    /// Dimension override for variable-dimension functions.
    #[arg(long)]
    dim: Option<usize>,
    /// Noise seed (only f4 is stochastic).
    #[arg(long, env = "GBO_SEED", default_value_t = 0)]
    seed: u64,
    /// Write the run record as JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    gbo: GboArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Comma-separated function ids.
    #[arg(long, value_delimiter = ',', required = true)]
    functions: Vec<String>,
    /// Comma-separated algorithms: gbo, pso, de, ga, sa.
    #[arg(long, value_delimiter = ',', default_value = "gbo")]
    algorithms: Vec<Algorithm>,
    /// Runs per (function, algorithm); repeat k uses seed + k.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    repeats: u64,
    /// Base seed.
    #[arg(long, env = "GBO_SEED", default_value_t = 0)]
    seed: u64,
    /// Report destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Markdown)]
    format: FormatArg,
    /// CSV journal appended after every run.
    #[arg(long)]
    journal: Option<PathBuf>,
    /// Run sequentially so wall times are not shared with sibling runs.
    #[arg(long)]
    timing: bool,
    /// JSON experiment file; command-line flags are ignored except --out and --format.
    #[arg(long, conflicts_with_all = ["functions"])]
    config: Option<PathBuf>,
    #[command(flatten)]
    gbo: GboArgs,
}

#[derive(Debug, Args)]
pub struct StabilityArgs {
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    repeats: u64,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', default_value = "gbo")]
    algorithms: Vec<Algorithm>,
    #[arg(long, env = "GBO_SEED", default_value_t = 0)]
    seed: u64,
    /// Per-repeat series as CSV; stdout when absent. A summary is printed either way.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    gbo: GboArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        _ if cli.list_functions => commands::list_functions(),
        Some(Command::ListFunctions) => commands::list_functions(),
        Some(Command::Run(args)) => commands::run(args),
        Some(Command::Compare(args)) => commands::compare(args),
        Some(Command::Stability(args)) => commands::stability(args),
        None => {
            eprintln!("gbo: no command given; try `gbo --help`");
            Ok(commands::Outcome::Error)
        }
    };
    match outcome {
        Ok(o) => o.code(),
        Err(e) => {
            eprintln!("gbo: {e}");
            ExitCode::from(1)
        }
    }
}

pub(crate) fn parse_function(s: &str) -> gbo_core::Result<FunctionId> {
    s.parse()
}
