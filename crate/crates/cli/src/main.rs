//! `locdom`: compute γ, β, η and λ, enumerate graph censuses, build graph
//! families and check the known bounds from the command line.

mod commands;
mod exit;
mod filter;
mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::exit::CliError;
use crate::output::Output;

#[derive(Parser)]
#[command(
    name = "locdom",
    version,
    about = "Locating and dominating codes in small graphs"
)]
struct Cli {
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Human-readable table instead of JSON lines.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact parameters and optimal codes of every input graph.
    Compute {
        /// graph6 or edge-list file; standard input when absent or `-`.
        #[arg(long, short)]
        input: Option<PathBuf>,
        /// Comma-separated subset of gamma,beta,eta,lambda.
        #[arg(long, value_delimiter = ',', default_value = "gamma,beta,eta,lambda")]
        params: Vec<String>,
    },
    /// Connected graphs up to isomorphism, filtered.
    Enumerate {
        /// Order or inclusive range such as `3..8`.
        #[arg(long)]
        n: String,
        /// Comparisons over gamma, beta, eta, lambda, n, diam joined by `and`.
        #[arg(long, default_value = "any")]
        filter: String,
        #[arg(long, value_enum, default_value_t = EnumerateOutput::Count)]
        output: EnumerateOutput,
    },
    /// Build a member of a named family.
    Family {
        /// Family name; `locdom family list` shows them all.
        name: String,
        /// Integer parameters of the family (a kind name first for `eta-n-2`).
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Emit::Graph6)]
        emit: Emit,
        /// Compute the claimed parameters and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Check statements over enumerated graphs or an input stream.
    Verify {
        /// Statement id, or `all`; `locdom verify list` shows them.
        theorem: String,
        /// Largest order in the sweep.
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Check the graphs of this file instead of enumerating.
        #[arg(long, short)]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateOutput {
    Count,
    Census,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Graph6,
    Edgelist,
    None,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("locdom: cannot start {jobs} workers: {e}");
            return ExitCode::from(exit::INVARIANT);
        }
    }
    let mut out = Output::new(cli.table);
    let result = match cli.command {
        Command::Compute { input, params } => {
            commands::compute(&mut out, input.as_deref(), &params)
        }
        Command::Enumerate { n, filter, output } => {
            commands::enumerate(&mut out, &n, &filter, output)
        }
        Command::Family {
            name,
            params,
            emit,
            verify,
        } => commands::family(&mut out, &name, &params, emit, verify),
        Command::Verify {
            theorem,
            n_max,
            input,
        } => commands::verify(&mut out, &theorem, n_max, input.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError { code, message }) => {
            eprintln!("locdom: {message}");
            ExitCode::from(code)
        }
    }
}
