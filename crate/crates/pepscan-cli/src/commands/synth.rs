use crate::util::write_out;
use crate::CliError;
use pepscan::bio::{synth_corpus, to_fasta};
use std::path::PathBuf;

#[derive(clap::Args)]
pub struct Args {
    /// Number of records to generate
    #[arg(long)]
    records: usize,
    /// Exact residue total across all records
    #[arg(long, value_name = "N")]
    total_length: usize,
    /// Generator seed; identical seeds give byte-identical corpora
    #[arg(long, default_value_t = pepscan::bench::DEFAULT_SEED)]
    seed: u64,
    /// Output path (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let records = synth_corpus(args.records, args.total_length, args.seed)
        .map_err(|e| CliError::data(e.to_string()))?;
    write_out(&args.out, &to_fasta(&records))
}
