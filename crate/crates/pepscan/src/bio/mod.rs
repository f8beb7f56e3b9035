//! Protein data pipeline: FASTA parsing, tryptic digestion, scan-text
//! assembly and corpus statistics.
//!
//! Digestion produces the peptide pattern sets the matcher consumes;
//! [`build_corpus`] concatenates protein sequences with sentinel separators
//! into the single text every engine scans, so no match can span a protein
//! boundary.

mod corpus;
mod digest;
mod fasta;
mod synth;

pub use corpus::{build_corpus, corpus_stats, CorpusStats, ProteinCorpus, RecordLength};
pub use digest::{digest, DigestParams, Enzyme, Peptide};
pub use fasta::{parse_fasta, to_fasta, FastaRecord};
pub use synth::synth_corpus;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no FASTA records found (expected at least one '>' header)")]
    NoRecords,

    #[error("record {record}: residue {} is not a letter", crate::ac::fmt_byte(*byte))]
    InvalidResidue { record: String, byte: u8 },

    #[error("record {0}: sequence is empty")]
    EmptySequence(String),

    #[error("unsupported enzyme {0:?} (only trypsin is available)")]
    UnsupportedEnzyme(String),

    #[error("digestion parameters: {0}")]
    InvalidDigestParams(String),

    #[error("sentinel {} is a residue letter; pick one outside A-Z", crate::ac::fmt_byte(*.0))]
    SentinelInAlphabet(u8),

    #[error("corpus needs at least one record")]
    EmptyCorpus,

    #[error("cannot spread {total} residues over {records} records")]
    InfeasibleSynthesis { records: usize, total: usize },
}
