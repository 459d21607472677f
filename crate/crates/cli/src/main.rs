//! `symprep`: symmetry-aware CNF preprocessing from the command line.
//!
//! Payloads go to standard output or `--out`; diagnostics go to standard
//! error. `preprocess` exits 10 when the output is empty (satisfiable) and
//! 20 when it is the conflict formula.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "symprep", version, about = "Symmetry-aware CNF preprocessing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the symmetry-preserving preprocessor.
    Preprocess(PreprocessArgs),
    /// Export the model graph.
    Graph(GraphArgs),
    /// Compute the syntactic automorphism group.
    Detect(DetectArgs),
    /// Reducible and hidden symmetry of a preprocessing run.
    Metrics(MetricsArgs),
    /// Check that generators are symmetries of a formula.
    Verify(VerifyArgs),
    /// Generate benchmark formulas.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct PreprocessArgs {
    /// Input DIMACS files.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Output file; a directory when several inputs are given.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Trace file; a directory when several inputs are given.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Most pipeline passes.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    passes: u32,
    /// Extra clauses a variable elimination may add.
    #[arg(long, default_value_t = 0)]
    bound: i64,
    /// Worker threads for several inputs.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
}

#[derive(Args, Debug)]
struct GraphArgs {
    input: PathBuf,
    /// Refine colors and drop vertices in singleton classes.
    #[arg(long)]
    prune: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DetectArgs {
    input: PathBuf,
    /// Search node budget.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct MetricsArgs {
    original: PathBuf,
    preprocessed: PathBuf,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    input: PathBuf,
    generators: PathBuf,
    /// Check semantic symmetry by model enumeration, up to this many
    /// variables.
    #[arg(long, value_name = "MAXVARS", value_parser = clap::value_parser!(u32).range(1..=24))]
    semantic: Option<u32>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Pigeonhole formula.
    Php {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        pigeons: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        holes: u32,
    },
    /// Uniform random fixed-width CNF.
    Random {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        vars: u32,
        #[arg(long)]
        clauses: usize,
        #[arg(long, default_value_t = 3)]
        width: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
