//! Design-automation pipeline: compile a built automaton into synthesizable
//! VHDL plus a machine-readable transition-table artifact, and structurally
//! validate the generated design.
//!
//! Failure links are compiled away before emission: the generated machine is
//! a dense Moore FSM taking one character per clock, which is what gives the
//! hardware its size-independent per-character cost. Behavioral verification
//! is delegated to the JSON twin ([`generate_table`] / [`load_table`]):
//! loading it back must reproduce the exact matching behavior, while
//! [`validate_design`] checks the VHDL text structurally.

mod table;
mod validate;
mod vhdl;

pub use table::{generate_table, load_table, TableArtifact};
pub use validate::{validate_design, CheckOutcome, ValidationReport};
pub use vhdl::generate_vhdl;

use thiserror::Error;

/// Width of the `char_in` port in bits; fixed to one byte.
pub const CHAR_WIDTH: usize = 8;

/// Register widths above this are rejected.
pub const MAX_WIDTH: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{states} states need a {width}-bit field, above the {MAX_WIDTH}-bit limit")]
    TooManyStates { states: usize, width: usize },

    #[error("{0:?} is not a valid VHDL identifier")]
    InvalidIdentifier(String),

    #[error("table artifact at {path}: {reason}")]
    SchemaError { path: String, reason: String },

    #[error("inconsistent table artifact: {0}")]
    InconsistentTable(String),
}

/// State register encoding of the generated FSM.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StateEncoding {
    /// `ceil(log2(state_count))`-bit register; minimal width.
    #[default]
    Binary,
    /// One flip-flop per state.
    OneHot,
}

/// Code-generation options. Reset is always synchronous; `char_in` is always
/// [`CHAR_WIDTH`] bits wide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingConfig {
    pub entity_name: String,
    pub state_encoding: StateEncoding,
}

impl Default for EncodingConfig {
    fn default() -> Self {
        EncodingConfig {
            entity_name: "ac_fsm".to_string(),
            state_encoding: StateEncoding::Binary,
        }
    }
}

impl EncodingConfig {
    pub fn with_entity(name: &str) -> Self {
        EncodingConfig {
            entity_name: name.to_string(),
            ..EncodingConfig::default()
        }
    }
}

/// Bits needed to count from 0 to `values - 1`; at least one.
pub(crate) fn index_width(values: usize) -> usize {
    match values {
        0..=2 => 1,
        n => (n - 1).ilog2() as usize + 1,
    }
}

/// Binary state-register width for a state count.
pub fn state_register_width(state_count: usize, encoding: StateEncoding) -> usize {
    match encoding {
        StateEncoding::Binary => index_width(state_count),
        StateEncoding::OneHot => state_count,
    }
}

/// Width of the `match_count` port: enough bits for 0..=pattern_count.
pub fn id_width(pattern_count: usize) -> usize {
    index_width(pattern_count + 1)
}
