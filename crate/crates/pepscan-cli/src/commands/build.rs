use crate::util::{load_patterns, sentinel_byte, write_file};
use crate::CliError;
use pepscan::ac::{Alphabet, Automaton};
use pepscan::codegen::generate_table;
use std::path::PathBuf;

#[derive(clap::Args)]
pub struct Args {
    /// Pattern file: one pattern per line
    #[arg(long, value_name = "FILE")]
    patterns: PathBuf,
    /// Sentinel byte separating concatenated sequences
    #[arg(long, default_value = "#")]
    sentinel: String,
    /// Where to write the table artifact (JSON)
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let sentinel = sentinel_byte(&args.sentinel)?;
    let patterns = load_patterns(&args.patterns)?;
    let alphabet = Alphabet::new(&(b'A'..=b'Z').collect::<Vec<_>>(), sentinel)
        .map_err(|e| CliError::data(e.to_string()))?;
    let automaton = Automaton::compile(&patterns, alphabet)
        .map_err(|e| CliError::data(format!("{}: {e}", args.patterns.display())))?;

    let artifact = generate_table(&automaton);
    write_file(&args.out, &artifact.to_json())?;
    log::info!(
        "{} patterns -> {} states -> {}",
        automaton.pattern_count(),
        automaton.state_count(),
        args.out.display()
    );
    println!(
        "built automaton: {} patterns, {} states, table written to {}",
        automaton.pattern_count(),
        automaton.state_count(),
        args.out.display()
    );
    Ok(())
}
