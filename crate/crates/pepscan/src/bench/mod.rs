//! Benchmark harness: runs the (protein set × peptide set) experiment
//! matrix, calibrates the cost model against the embedded reference tables,
//! and renders comparison reports.
//!
//! Reference timing tables are reproduced through the calibrated model, not
//! through raw wall-clock numbers: a modern host bears no relation to the 50
//! MHz soft-core the references were measured on. Wall-clock measurements of
//! the sparse engine are still collected as engine-relative evidence and
//! reported separately.

mod calibrate;
pub mod reference;
mod report;
mod stress;
mod workload;

pub use calibrate::{calibrate, Calibration, CalibrationCell, CalibrationReport};
pub use report::{emit_report, BenchReport};
pub use stress::nested_prefix_family;
pub use workload::{build_workload, scheduled_pattern_set, text_length_for, Workload};

use crate::hw::{ComponentSim, CostModel, EngineKind};
use serde::Serialize;
use std::time::Instant;
use thiserror::Error;

/// Seed used when none is given; also the seed behind the frozen
/// [`CostModel::default`] constants.
pub const DEFAULT_SEED: u64 = 42;

/// Frozen output of [`calibrate`] on the embedded reference tables with
/// [`DEFAULT_SEED`]. A test re-derives these from a live calibration run;
/// update them together with any workload-generation change.
pub const CALIBRATED_HW_US_PER_CHAR: f64 = 1.11611687090862;
pub const CALIBRATED_SW_US_BASE_PER_CHAR: f64 = 4.751046710116639;
pub const CALIBRATED_SW_US_PER_EDGE_SCAN: f64 = 0.5273547040379345;

#[derive(Debug, Error)]
pub enum Error {
    #[error("design matrix is singular; cannot fit software cost constants")]
    SingularFit,

    #[error("bench config: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Ac(#[from] crate::ac::Error),

    #[error(transparent)]
    Bio(#[from] crate::bio::Error),

    #[error(transparent)]
    Hw(#[from] crate::hw::Error),

    #[error("cell ({proteins} proteins, {peptides} peptides): {source}")]
    Cell {
        proteins: usize,
        peptides: usize,
        source: Box<Error>,
    },
}

/// Experiment grid and measurement settings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchConfig {
    pub protein_set_sizes: Vec<usize>,
    pub peptide_set_sizes: Vec<usize>,
    /// Wall-clock repetitions per cell; the median is reported.
    pub repetitions: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            protein_set_sizes: reference::PROTEIN_SET_SIZES.to_vec(),
            peptide_set_sizes: reference::PEPTIDE_SET_SIZES.to_vec(),
            repetitions: 5,
            seed: DEFAULT_SEED,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let check = |name: &str, sizes: &[usize]| {
            if sizes.is_empty() {
                return Err(Error::InvalidConfig(format!("{name} must not be empty")));
            }
            if sizes.contains(&0) {
                return Err(Error::InvalidConfig(format!("{name} must be positive")));
            }
            if sizes.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be strictly increasing"
                )));
            }
            Ok(())
        };
        check("protein_set_sizes", &self.protein_set_sizes)?;
        check("peptide_set_sizes", &self.peptide_set_sizes)?;
        if self.repetitions == 0 {
            return Err(Error::InvalidConfig(
                "repetitions must be at least 1".into(),
            ));
        }
        Ok(())
    }

    /// Parses the line-oriented `key=value` config format. Blank lines and
    /// `#` comments are ignored; unknown keys are rejected.
    pub fn from_key_values(text: &str) -> Result<Self, Error> {
        let mut config = BenchConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidConfig(format!("line {}: expected key=value", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let parse_list = |value: &str| -> Result<Vec<usize>, Error> {
                value
                    .split(',')
                    .map(|v| {
                        v.trim().parse::<usize>().map_err(|_| {
                            Error::InvalidConfig(format!("line {}: bad number {v:?}", lineno + 1))
                        })
                    })
                    .collect()
            };
            match key {
                "protein_set_sizes" => config.protein_set_sizes = parse_list(value)?,
                "peptide_set_sizes" => config.peptide_set_sizes = parse_list(value)?,
                "repetitions" => {
                    config.repetitions = value.parse().map_err(|_| {
                        Error::InvalidConfig(format!("line {}: bad repetitions", lineno + 1))
                    })?
                }
                "seed" => {
                    config.seed = value.parse().map_err(|_| {
                        Error::InvalidConfig(format!("line {}: bad seed", lineno + 1))
                    })?
                }
                other => {
                    return Err(Error::InvalidConfig(format!(
                        "line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        config.validate()?;
        Ok(config)
    }
}

/// Results for one (protein set, peptide set) grid cell.
#[derive(Debug, Clone, Serialize)]
pub struct BenchCell {
    pub proteins: usize,
    pub peptides: usize,
    pub text_len: usize,
    pub state_count: usize,
    /// Sparse-engine work profile on this cell.
    pub edge_comparisons: u64,
    pub fail_traversals: u64,
    pub dense_lookups: u64,
    pub event_count: usize,
    /// Median wall-clock time of the sparse engine on this host.
    pub measured_sw_us: f64,
    pub modeled_sw_us: f64,
    pub modeled_hw_us: f64,
    /// Modeled software time over modeled hardware time.
    pub speedup: f64,
}

/// A completed matrix run: cells plus the cost model that priced them.
#[derive(Debug)]
pub struct MatrixOutcome {
    pub cells: Vec<BenchCell>,
    pub cost_model: CostModel,
    pub calibration: CalibrationReport,
}

/// Runs the full experiment matrix.
///
/// Per cell: the sparse engine is timed (`repetitions` runs, median) and
/// profiled, the dense engine and the register-level simulator both scan the
/// same text, all three event streams are checked equal, and modeled times
/// come from the calibrated cost model.
pub fn run_matrix(config: &BenchConfig) -> Result<MatrixOutcome, Error> {
    config.validate()?;
    let workload = build_workload(
        &config.protein_set_sizes,
        &config.peptide_set_sizes,
        config.seed,
    )?;

    // Calibration always targets the reference grid; reuse the workload when
    // the config already is that grid.
    let calibration = if config.protein_set_sizes == reference::PROTEIN_SET_SIZES
        && config.peptide_set_sizes == reference::PEPTIDE_SET_SIZES
    {
        calibrate::calibrate_with_workload(&reference::REFERENCE, &workload)?
    } else {
        calibrate(&reference::REFERENCE, config.seed)?
    };
    let cost_model = calibration.cost_model;

    let mut cells = Vec::with_capacity(workload.corpora.len() * workload.automata.len());
    for (i, corpus) in workload.corpora.iter().enumerate() {
        for (j, automaton) in workload.automata.iter().enumerate() {
            let proteins = config.protein_set_sizes[i];
            let peptides = config.peptide_set_sizes[j];
            let in_cell = |source: Error| Error::Cell {
                proteins,
                peptides,
                source: Box::new(source),
            };
            let text = corpus.scan_text();

            let mut timings_us = Vec::with_capacity(config.repetitions);
            let mut sparse = None;
            for _ in 0..config.repetitions {
                let started = Instant::now();
                let result = automaton.match_sparse(text);
                timings_us.push(started.elapsed().as_secs_f64() * 1e6);
                sparse = Some(result.map_err(|e| in_cell(e.into()))?);
            }
            let (sparse_events, sparse_work) = sparse.expect("at least one repetition");

            let (dense_events, dense_work) =
                automaton.match_dense(text).map_err(|e| in_cell(e.into()))?;
            let mut sim =
                ComponentSim::new(automaton).with_hw_us_per_char(cost_model.hw_us_per_char);
            let outcome = sim.run_protein_list(text).map_err(|e| in_cell(e.into()))?;
            assert_eq!(sparse_events, dense_events, "engines disagree on a cell");
            assert_eq!(
                outcome.events, dense_events,
                "simulator disagrees on a cell"
            );

            let modeled_sw_us = cost_model
                .estimate_us(EngineKind::Software, text.len(), Some(&sparse_work))
                .map_err(|e| in_cell(e.into()))?;
            let modeled_hw_us = outcome.modeled_us;

            cells.push(BenchCell {
                proteins,
                peptides,
                text_len: text.len(),
                state_count: automaton.state_count(),
                edge_comparisons: sparse_work.edge_comparisons,
                fail_traversals: sparse_work.fail_traversals,
                dense_lookups: dense_work.lookups,
                event_count: dense_events.len(),
                measured_sw_us: median(&mut timings_us),
                modeled_sw_us,
                modeled_hw_us,
                speedup: modeled_sw_us / modeled_hw_us,
            });
        }
    }

    Ok(MatrixOutcome {
        cells,
        cost_model,
        calibration: calibration.report,
    })
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).expect("timings are finite"));
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}
