use crate::util::{read_file, write_out};
use crate::{CliError, OutputFormat};
use pepscan::bio::{digest, parse_fasta, DigestParams, Enzyme};
use std::path::PathBuf;

#[derive(clap::Args)]
pub struct Args {
    /// FASTA file with the proteins to digest
    #[arg(long, value_name = "FILE")]
    fasta: PathBuf,
    /// Cleavage enzyme
    #[arg(long, default_value = "trypsin")]
    enzyme: String,
    /// Missed cleavages to include (0..=3)
    #[arg(long, default_value_t = 0)]
    missed: u8,
    /// Drop peptides shorter than this
    #[arg(long, value_name = "N", default_value_t = 1)]
    min_len: usize,
    /// Drop peptides longer than this
    #[arg(long, value_name = "N")]
    max_len: Option<usize>,
    /// Emit each distinct peptide sequence only once
    #[arg(long)]
    dedupe: bool,
    /// Output: text is one peptide per line (pattern-file compatible)
    #[arg(long, value_enum, default_value_t = crate::OutputFormat::Text)]
    format: OutputFormat,
    /// Output path (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let enzyme: Enzyme = args
        .enzyme
        .parse()
        .map_err(|e: pepscan::bio::Error| CliError::Usage(e.to_string()))?;
    let params = DigestParams {
        enzyme,
        missed_cleavages: args.missed,
        min_len: args.min_len,
        max_len: args.max_len,
        dedupe: args.dedupe,
    };

    let text = read_file(&args.fasta)?;
    let records =
        parse_fasta(&text).map_err(|e| CliError::data(format!("{}: {e}", args.fasta.display())))?;

    let mut total = 0usize;
    let mut lines = String::new();
    let mut entries = Vec::new();
    if args.format == OutputFormat::Csv {
        lines.push_str("record,start,peptide\n");
    }
    for record in &records {
        let peptides = digest(&record.sequence, &params)
            .map_err(|e| CliError::data(format!("record {}: {e}", record.id)))?;
        total += peptides.len();
        for peptide in peptides {
            let sequence = String::from_utf8_lossy(&peptide.sequence).into_owned();
            match args.format {
                OutputFormat::Text => {
                    lines.push_str(&sequence);
                    lines.push('\n');
                }
                OutputFormat::Csv => {
                    lines.push_str(&format!("{},{},{sequence}\n", record.id, peptide.start));
                }
                OutputFormat::Json => entries.push(serde_json::json!({
                    "record": record.id,
                    "start": peptide.start,
                    "peptide": sequence,
                })),
            }
        }
    }

    log::info!("digested {} records into {total} peptides", records.len());
    match args.format {
        OutputFormat::Text | OutputFormat::Csv => write_out(&args.out, &lines),
        OutputFormat::Json => {
            let mut json =
                serde_json::to_string_pretty(&entries).expect("peptide entries serialize");
            json.push('\n');
            write_out(&args.out, &json)
        }
    }
}
