use crate::{CliError, PatternSource};
use pepscan::ac::{Alphabet, Automaton, PatternSet};
use pepscan::bio::{build_corpus, parse_fasta, ProteinCorpus};
use pepscan::codegen::{load_table, TableArtifact};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::data(format!("cannot read {}: {e}", path.display())))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::data(format!("cannot write {}: {e}", path.display())))
}

/// Writes to `--out` when given, otherwise to stdout.
pub fn write_out(out: &Option<PathBuf>, contents: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, contents),
        None => std::io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|e| CliError::data(format!("cannot write to stdout: {e}"))),
    }
}

/// Parses the single-character `--sentinel` flag.
pub fn sentinel_byte(sentinel: &str) -> Result<u8, CliError> {
    let bytes = sentinel.as_bytes();
    if bytes.len() != 1 {
        return Err(CliError::Usage(format!(
            "--sentinel must be a single ASCII character, got {sentinel:?}"
        )));
    }
    Ok(bytes[0])
}

pub fn load_patterns(path: &Path) -> Result<PatternSet, CliError> {
    let text = read_file(path)?;
    let set = PatternSet::from_lines(&text);
    log::info!("{}: {} patterns", path.display(), set.len());
    Ok(set)
}

/// Loads and compiles an automaton from either `--patterns` or `--table`.
pub fn load_automaton(source: &PatternSource, sentinel: u8) -> Result<Automaton, CliError> {
    match (&source.patterns, &source.table) {
        (Some(patterns_path), None) => {
            let patterns = load_patterns(patterns_path)?;
            let alphabet = Alphabet::new(&(b'A'..=b'Z').collect::<Vec<_>>(), sentinel)
                .map_err(|e| CliError::data(e.to_string()))?;
            Automaton::compile(&patterns, alphabet)
                .map_err(|e| CliError::data(format!("{}: {e}", patterns_path.display())))
        }
        (None, Some(table_path)) => {
            let text = read_file(table_path)?;
            let artifact = TableArtifact::from_json(&text)
                .map_err(|e| CliError::data(format!("{}: {e}", table_path.display())))?;
            load_table(&artifact)
                .map_err(|e| CliError::data(format!("{}: {e}", table_path.display())))
        }
        _ => Err(CliError::Usage(
            "exactly one of --patterns or --table is required".to_string(),
        )),
    }
}

pub fn load_corpus(path: &Path, sentinel: u8) -> Result<ProteinCorpus, CliError> {
    let text = read_file(path)?;
    let records =
        parse_fasta(&text).map_err(|e| CliError::data(format!("{}: {e}", path.display())))?;
    build_corpus(records, sentinel).map_err(|e| CliError::data(format!("{}: {e}", path.display())))
}
