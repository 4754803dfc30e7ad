use std::path::PathBuf;
use std::process::ExitCode;

use acsep_core::triangulation::Method;
use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod exit;

use exit::Failure;

#[derive(Parser)]
#[command(
    name = "acsep",
    version,
    about = "Almost-clique separators and clique separator decomposition for PACE graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ListArg {
    Heuristic,
    Standard,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ListerArg {
    Heuristic,
    Standard,
}

#[derive(Subcommand)]
enum Command {
    /// Triangulate a graph and write its clique tree as a `.td` decomposition.
    Triangulate {
        #[arg(long, value_parser = parse_method)]
        method: Method,
        input: PathBuf,
        /// Write the `.td` text here instead of embedding it in the JSON summary.
        #[arg(long)]
        td: Option<PathBuf>,
        /// Skip the edge-by-edge minimality check.
        #[arg(long)]
        no_verify: bool,
    },
    /// List almost-clique minimal separators as JSON.
    ListAcs {
        #[arg(long, value_enum, default_value = "heuristic")]
        method: ListArg,
        /// Minimal triangulation used by the heuristic lister.
        #[arg(long, value_parser = parse_method, default_value = "mmaf")]
        triangulation: Method,
        /// Also extend the list greedily with every non-crossing separator.
        #[arg(long)]
        expand: bool,
        input: PathBuf,
    },
    /// Fill separators round by round and split the result into atoms.
    Decompose {
        #[arg(long, value_enum, default_value = "heuristic")]
        lister: ListerArg,
        #[arg(long, value_parser = parse_method, default_value = "mmaf")]
        triangulation: Method,
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Run `decompose` statistics for every `.gr` file of a directory.
    Bench {
        #[arg(long, value_enum, value_delimiter = ',', default_value = "heuristic,standard")]
        listers: Vec<ListerArg>,
        #[arg(long, value_parser = parse_method, default_value = "mmaf")]
        triangulation: Method,
        dir: PathBuf,
        #[arg(long)]
        csv: PathBuf,
        /// Per-instance ratio CSV; defaults to `<csv stem>_ratios.csv`.
        #[arg(long)]
        ratios: Option<PathBuf>,
        /// Also count all almost-clique minimal separators and the greedy
        /// extension of the first round's list.
        #[arg(long)]
        expand: bool,
    },
    /// Check the library against brute force on a small graph.
    Verify {
        input: PathBuf,
        #[arg(long, default_value_t = 16)]
        max_n_subsets: usize,
        #[arg(long, default_value_t = 16)]
        max_n_tw: usize,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse::<Method>().map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Triangulate { method, input, td, no_verify } => commands::triangulate(&input, method, td, !no_verify),
        Command::ListAcs { method, triangulation, expand, input } => {
            commands::list_acs(&input, method, triangulation, expand)
        }
        Command::Decompose { lister, triangulation, input, out_dir } => {
            commands::decompose(&input, commands::lister(lister, triangulation), &out_dir)
        }
        Command::Bench { listers, triangulation, dir, csv, ratios, expand } => {
            let listers = listers.into_iter().map(|l| commands::lister(l, triangulation)).collect::<Vec<_>>();
            commands::bench(&dir, &listers, &csv, ratios, expand)
        }
        Command::Verify { input, max_n_subsets, max_n_tw } => commands::verify(&input, max_n_subsets, max_n_tw),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("acsep: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
