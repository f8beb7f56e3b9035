//! `pepscan`: build Aho-Corasick matchers from peptide lists, run them over
//! protein sets with three interchangeable engines, simulate the
//! memory-mapped hardware component, generate VHDL, and reproduce the
//! reference benchmark tables.

mod commands;
mod util;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exit code for bad invocations (missing/contradictory flags).
const EXIT_USAGE: u8 = 1;
/// Exit code for data errors (unreadable/invalid files, failed runs).
const EXIT_DATA: u8 = 2;

#[derive(Parser)]
#[command(
    name = "pepscan",
    version,
    about = "Multi-pattern peptide matching toolkit",
    after_help = "Set PEPSCAN_LOG=error|warn|info|debug to control diagnostics on stderr."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tryptic digestion of FASTA proteins into peptide lists
    Digest(commands::digest::Args),
    /// Build an automaton from a pattern file and write its table artifact
    Build(commands::build::Args),
    /// Match patterns against a protein set and report occurrences
    Match(commands::match_cmd::Args),
    /// Drive the memory-mapped component simulation over a protein set
    Simulate(commands::simulate::Args),
    /// Generate VHDL (and optionally the table artifact) for an automaton
    Codegen(commands::codegen::Args),
    /// Run the benchmark matrix and emit the comparison reports
    Bench(commands::bench::Args),
    /// Corpus statistics for a FASTA file
    Stats(commands::stats::Args),
    /// Generate a synthetic FASTA corpus with an exact residue total
    SynthCorpus(commands::synth::Args),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EngineChoice {
    Sparse,
    Dense,
    Simulate,
}

/// Errors routed to exit codes: usage problems exit 1, data problems exit 2.
#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(String),
}

impl CliError {
    fn data(message: impl Into<String>) -> Self {
        CliError::Data(message.into())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Data(msg) => write!(f, "{msg}"),
        }
    }
}

/// Common I/O flags shared by several subcommands.
#[derive(clap::Args)]
struct PatternSource {
    /// Pattern file: one pattern per line, blank lines and '#' comments ignored
    #[arg(long, value_name = "FILE")]
    patterns: Option<PathBuf>,
    /// Table artifact (JSON) produced by `build` or `codegen`
    #[arg(long, value_name = "FILE", conflicts_with = "patterns")]
    table: Option<PathBuf>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(
        env_logger::Env::new()
            .filter_or("PEPSCAN_LOG", "warn")
            .write_style("PEPSCAN_LOG_STYLE"),
    )
    .format_timestamp(None)
    .init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help/version requests are successful exits, anything else is a
            // usage error.
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{err}");
                    ExitCode::from(EXIT_USAGE)
                }
            };
        }
    };

    let result = match cli.command {
        Command::Digest(args) => commands::digest::run(args),
        Command::Build(args) => commands::build::run(args),
        Command::Match(args) => commands::match_cmd::run(args),
        Command::Simulate(args) => commands::simulate::run(args),
        Command::Codegen(args) => commands::codegen::run(args),
        Command::Bench(args) => commands::bench::run(args),
        Command::Stats(args) => commands::stats::run(args),
        Command::SynthCorpus(args) => commands::synth::run(args),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("pepscan: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Data(msg)) => {
            eprintln!("pepscan: {msg}");
            ExitCode::from(EXIT_DATA)
        }
    }
}
