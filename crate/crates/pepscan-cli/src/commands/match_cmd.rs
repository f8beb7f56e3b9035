use crate::util::{load_automaton, load_corpus, sentinel_byte, write_out};
use crate::{CliError, EngineChoice, PatternSource};
use pepscan::ac::{Automaton, MatchEvent, WorkProfile};
use pepscan::bio::ProteinCorpus;
use pepscan::hw::ComponentSim;
use std::path::PathBuf;

#[derive(clap::Args)]
pub struct Args {
    #[command(flatten)]
    source: PatternSource,
    /// FASTA file with the proteins to scan
    #[arg(long, value_name = "FILE")]
    fasta: PathBuf,
    /// Matching engine
    #[arg(long, value_enum, default_value_t = crate::EngineChoice::Dense)]
    engine: EngineChoice,
    /// Sentinel byte separating concatenated sequences
    #[arg(long, default_value = "#")]
    sentinel: String,
    /// Output path for the match CSV (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let sentinel = sentinel_byte(&args.sentinel)?;
    let automaton = load_automaton(&args.source, sentinel)?;
    let corpus = load_corpus(&args.fasta, sentinel)?;
    let text = corpus.scan_text();

    let (events, work, modeled_us) = match args.engine {
        EngineChoice::Sparse => {
            let (events, work) = automaton
                .match_sparse(text)
                .map_err(|e| CliError::data(format!("{}: {e}", args.fasta.display())))?;
            (events, work, None)
        }
        EngineChoice::Dense => {
            let (events, work) = automaton
                .match_dense(text)
                .map_err(|e| CliError::data(format!("{}: {e}", args.fasta.display())))?;
            (events, work, None)
        }
        EngineChoice::Simulate => {
            let mut sim = ComponentSim::new(&automaton);
            let outcome = sim
                .run_protein_list(text)
                .map_err(|e| CliError::data(format!("{}: {e}", args.fasta.display())))?;
            let work = WorkProfile {
                lookups: outcome.cycles,
                ..WorkProfile::default()
            };
            (outcome.events, work, Some(outcome.modeled_us))
        }
    };

    write_out(&args.out, &events_csv(&events, &automaton, &corpus))?;

    let mut summary = format!(
        "{} matches over {} residues in {} records",
        events.len(),
        corpus.residue_count(),
        corpus.records().len()
    );
    match args.engine {
        EngineChoice::Sparse => summary.push_str(&format!(
            "; {} edge comparisons, {} failure traversals",
            work.edge_comparisons, work.fail_traversals
        )),
        EngineChoice::Dense => summary.push_str(&format!("; {} table lookups", work.lookups)),
        EngineChoice::Simulate => summary.push_str(&format!(
            "; {} clock cycles, modeled {:.1} us",
            work.lookups,
            modeled_us.expect("simulate sets modeled time")
        )),
    }
    eprintln!("{summary}");
    Ok(())
}

/// Renders events with per-record coordinates: `offset_in_record` is the
/// 0-based start of the match inside its record.
pub fn events_csv(events: &[MatchEvent], automaton: &Automaton, corpus: &ProteinCorpus) -> String {
    let mut out = String::from("pattern_id,pattern,record_id,offset_in_record\n");
    for event in events {
        let pattern = automaton.pattern(event.pattern_id);
        let (record_idx, local_end) = corpus
            .locate(event.end_offset)
            .expect("matches never span sentinels");
        out.push_str(&format!(
            "{},{},{},{}\n",
            event.pattern_id,
            String::from_utf8_lossy(pattern),
            corpus.records()[record_idx].id,
            local_end + 1 - pattern.len(),
        ));
    }
    out
}
