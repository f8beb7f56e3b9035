use crate::util::{load_patterns, sentinel_byte, write_file};
use crate::CliError;
use clap::ValueEnum;
use pepscan::ac::{Alphabet, Automaton};
use pepscan::codegen::{
    generate_table, generate_vhdl, validate_design, EncodingConfig, StateEncoding,
};
use std::path::PathBuf;

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum EncodingChoice {
    Binary,
    OneHot,
}

#[derive(clap::Args)]
pub struct Args {
    /// Pattern file: one pattern per line
    #[arg(long, value_name = "FILE")]
    patterns: PathBuf,
    /// Where to write the VHDL entity
    #[arg(long, value_name = "PATH")]
    out: PathBuf,
    /// Also write the JSON table artifact here
    #[arg(long, value_name = "PATH")]
    table: Option<PathBuf>,
    /// VHDL entity name
    #[arg(long, default_value = "ac_fsm")]
    entity: String,
    /// State register encoding
    #[arg(long, value_enum, default_value_t = EncodingChoice::Binary)]
    encoding: EncodingChoice,
    /// Write the structural validation report as JSON here
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
    /// Sentinel byte separating concatenated sequences
    #[arg(long, default_value = "#")]
    sentinel: String,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let sentinel = sentinel_byte(&args.sentinel)?;
    let patterns = load_patterns(&args.patterns)?;
    let alphabet = Alphabet::new(&(b'A'..=b'Z').collect::<Vec<_>>(), sentinel)
        .map_err(|e| CliError::data(e.to_string()))?;
    let automaton = Automaton::compile(&patterns, alphabet)
        .map_err(|e| CliError::data(format!("{}: {e}", args.patterns.display())))?;

    let config = EncodingConfig {
        entity_name: args.entity.clone(),
        state_encoding: match args.encoding {
            EncodingChoice::Binary => StateEncoding::Binary,
            EncodingChoice::OneHot => StateEncoding::OneHot,
        },
    };
    let vhdl = generate_vhdl(&automaton, &config).map_err(|e| CliError::data(e.to_string()))?;
    write_file(&args.out, &vhdl)?;

    if let Some(table_path) = &args.table {
        write_file(table_path, &generate_table(&automaton).to_json())?;
    }

    let report = validate_design(&vhdl, &automaton, &config);
    if let Some(report_path) = &args.report {
        write_file(report_path, &report.to_json())?;
    }
    eprintln!("{report}");
    if !report.passed() {
        return Err(CliError::data(
            "generated VHDL failed structural validation (see report above)".to_string(),
        ));
    }
    println!(
        "wrote {} ({} states, {} case arms expected)",
        args.out.display(),
        automaton.state_count(),
        automaton.state_count()
    );
    Ok(())
}
