use crate::util::{read_file, write_file};
use crate::CliError;
use pepscan::bench::{emit_report, reference::REFERENCE, run_matrix, BenchConfig};
use std::path::PathBuf;

#[derive(clap::Args)]
pub struct Args {
    /// Line-oriented key=value config (protein_set_sizes, peptide_set_sizes,
    /// repetitions, seed)
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Overrides the config seed
    #[arg(long)]
    seed: Option<u64>,
    /// Directory for report.csv, tables.md, fig4.dat, calibration.txt
    #[arg(long, value_name = "DIR", default_value = ".")]
    out_dir: PathBuf,
    /// Also print the comparison tables to stdout
    #[arg(long)]
    paper_tables: bool,
    /// Also write measured.csv with this host's wall-clock timings
    /// (non-deterministic, excluded from the byte-stable artifact set)
    #[arg(long)]
    measure: bool,
}

pub fn run(args: Args) -> Result<(), CliError> {
    let mut config = match &args.config {
        Some(path) => BenchConfig::from_key_values(&read_file(path)?)
            .map_err(|e| CliError::data(format!("{}: {e}", path.display())))?,
        None => BenchConfig::default(),
    };
    if let Some(seed) = args.seed {
        config.seed = seed;
    }

    log::info!(
        "benchmark grid: {:?} proteins x {:?} peptides, {} repetitions, seed {}",
        config.protein_set_sizes,
        config.peptide_set_sizes,
        config.repetitions,
        config.seed
    );
    let outcome = run_matrix(&config).map_err(|e| CliError::data(e.to_string()))?;
    let report = emit_report(&outcome.cells, &REFERENCE);

    std::fs::create_dir_all(&args.out_dir)
        .map_err(|e| CliError::data(format!("cannot create {}: {e}", args.out_dir.display())))?;
    write_file(&args.out_dir.join("report.csv"), &report.csv)?;
    write_file(&args.out_dir.join("tables.md"), &report.tables_md)?;
    write_file(&args.out_dir.join("fig4.dat"), &report.fig4)?;
    write_file(
        &args.out_dir.join("calibration.txt"),
        &outcome.calibration.to_text(),
    )?;
    if args.measure {
        write_file(&args.out_dir.join("measured.csv"), &report.measured_csv)?;
    }

    if args.paper_tables {
        print!("{}", report.tables_md);
    }
    eprintln!(
        "wrote report.csv, tables.md, fig4.dat, calibration.txt{} to {}",
        if args.measure { ", measured.csv" } else { "" },
        args.out_dir.display()
    );
    Ok(())
}
