//! `zagreb` command-line tool.

mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use input::GraphInput;
use output::OutputFormat;

#[derive(Debug, Parser)]
#[command(name = "zagreb", version, about = "Zagreb indices, their bounds and small-graph scans")]
struct Cli {
    #[arg(long, short = 'o', value_enum, default_value_t = OutputFormat::Text, global = true)]
    output: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// M1, M2 and the exact verdict on M1/n <= M2/m
    Index(IndexArgs),
    /// Lower and upper bounds on M1/n and M2/m with their equality cases
    Bounds(BoundsArgs),
    /// Smallest a for which C(a, b) is a counterexample
    Threshold(ThresholdArgs),
    /// Subdivision graph S(G), its index identities and verdict
    Subdivide(SubdivideArgs),
    /// Exhaustive or corpus scan
    Scan(ScanArgs),
    /// Smallest failing connected graph of a given cycle rank
    Search(SearchArgs),
}

#[derive(Debug, Args)]
pub struct IndexArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Also report the variable indices at this λ (repeatable)
    #[arg(long = "lambda", allow_negative_numbers = true)]
    pub lambdas: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: GraphInput,
    /// Include Das's upper bound on M1
    #[arg(long)]
    pub das: bool,
    /// Include the variable-index bounds at this λ (repeatable)
    #[arg(long = "variable", allow_negative_numbers = true)]
    pub lambdas: Vec<f64>,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    /// A single b, or an inclusive range LO..HI
    pub b: String,
}

#[derive(Debug, Args)]
pub struct SubdivideArgs {
    #[command(flatten)]
    pub input: GraphInput,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Enumerate every labeled graph with 1..=N vertices (N <= 8)
    #[arg(long, conflicts_with = "corpus", required_unless_present = "corpus")]
    pub n_max: Option<usize>,
    /// graph6 corpus file (`-` for stdin)
    #[arg(long)]
    pub corpus: Option<String>,
    /// tree, unicyclic, chemical or k-cyclic:K
    #[arg(long)]
    pub class: Option<String>,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Scan disconnected graphs too
    #[arg(long)]
    pub include_disconnected: bool,
    /// Check the lower, common upper and Das bounds on every graph
    #[arg(long)]
    pub bounds: bool,
    /// Check the subdivision inequality on every graph
    #[arg(long)]
    pub subdivision: bool,
    /// Check the variable-index bounds at this λ (repeatable)
    #[arg(long = "variable")]
    pub lambdas: Vec<f64>,
    /// Maximum failing / equality graphs listed in the report
    #[arg(long, default_value_t = zagreb::enumeration::DEFAULT_LIST_CAP)]
    pub list_cap: usize,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Cycle rank m − n + 1 of the connected graphs searched
    #[arg(long)]
    pub cycle_rank: usize,
    /// Largest order considered
    #[arg(long, default_value_t = 64)]
    pub n_cap: usize,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.downcast_ref::<std::io::Error>()
        .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.output;
    let result = match cli.command {
        Command::Index(args) => commands::index(&args, out),
        Command::Bounds(args) => commands::bounds(&args, out),
        Command::Threshold(args) => commands::threshold(&args, out),
        Command::Subdivide(args) => commands::subdivide(&args, out),
        Command::Scan(args) => commands::scan(&args, out),
        Command::Search(args) => commands::search(&args, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
