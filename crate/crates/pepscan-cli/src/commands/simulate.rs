use crate::commands::match_cmd::events_csv;
use crate::util::{load_automaton, load_corpus, sentinel_byte, write_file, write_out};
use crate::{CliError, PatternSource};
use pepscan::hw::{trace_csv, ComponentSim};
use std::path::PathBuf;

#[derive(clap::Args)]
pub struct Args {
    #[command(flatten)]
    source: PatternSource,
    /// FASTA file with the proteins to stream through the component
    #[arg(long, value_name = "FILE")]
    fasta: PathBuf,
    /// Sentinel byte separating concatenated sequences
    #[arg(long, default_value = "#")]
    sentinel: String,
    /// Write a per-character trace CSV (position, input, states, result)
    #[arg(long, value_name = "PATH")]
    trace: Option<PathBuf>,
    /// Output path for the match CSV (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let sentinel = sentinel_byte(&args.sentinel)?;
    let automaton = load_automaton(&args.source, sentinel)?;
    let corpus = load_corpus(&args.fasta, sentinel)?;

    let mut sim = ComponentSim::new(&automaton);
    if args.trace.is_some() {
        sim.enable_trace();
    }
    let outcome = sim
        .run_protein_list(corpus.scan_text())
        .map_err(|e| CliError::data(format!("{}: {e}", args.fasta.display())))?;

    if let Some(trace_path) = &args.trace {
        write_file(trace_path, &trace_csv(&sim.take_trace()))?;
    }
    write_out(&args.out, &events_csv(&outcome.events, &automaton, &corpus))?;
    eprintln!(
        "{} matches, {} cycles at {} MHz, modeled {:.1} us",
        outcome.events.len(),
        outcome.cycles,
        sim.clock_mhz(),
        outcome.modeled_us
    );
    Ok(())
}
