use crate::util::{load_corpus, sentinel_byte, write_out};
use crate::{CliError, OutputFormat};
use pepscan::bio::corpus_stats;
use std::path::PathBuf;

#[derive(clap::Args)]
pub struct Args {
    /// FASTA file to summarize
    #[arg(long, value_name = "FILE")]
    fasta: PathBuf,
    #[arg(long, value_enum, default_value_t = crate::OutputFormat::Text)]
    format: OutputFormat,
    /// Sentinel byte separating concatenated sequences
    #[arg(long, default_value = "#")]
    sentinel: String,
    /// Output path (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let sentinel = sentinel_byte(&args.sentinel)?;
    let corpus = load_corpus(&args.fasta, sentinel)?;
    let stats = corpus_stats(&corpus);
    match args.format {
        OutputFormat::Text => write_out(&args.out, &stats.to_text_table()),
        OutputFormat::Csv => {
            let mut csv = String::from("record,residues\n");
            for record in &stats.record_lengths {
                csv.push_str(&format!("{},{}\n", record.id, record.residues));
            }
            write_out(&args.out, &csv)
        }
        OutputFormat::Json => {
            let mut json = serde_json::to_string_pretty(&stats).expect("stats serialize");
            json.push('\n');
            write_out(&args.out, &json)
        }
    }
}
