//! Aho-Corasick automata with two matching backends.
//!
//! Construction follows the classic two-phase scheme: [`build_goto`] builds
//! the keyword trie, [`Automaton::build_failure`] adds breadth-first failure
//! links and merges output sets, and [`Automaton::compile_dense`] folds the
//! failure links into a total transition table. Matching is offered through
//! [`Automaton::match_sparse`] (linear scans over per-node edge arrays, the
//! software-style engine), [`Automaton::match_dense`] (one table lookup per
//! character, the hardware-style engine), and [`match_naive`] (a brute-force
//! oracle used to cross-check both).

mod alphabet;
mod automaton;
mod matching;
mod pattern;

pub use alphabet::Alphabet;
pub use automaton::{build_goto, Automaton, DenseTable, Edge, SparseNode};
pub use matching::{match_naive, MatchEvent, WorkProfile};
pub use pattern::PatternSet;

use thiserror::Error;

/// State index into [`Automaton::nodes`]; the root is always state 0.
pub type StateId = u32;

/// Dense index of a pattern within its [`PatternSet`], assigned in input order.
pub type PatternId = u32;

/// Root state of every automaton.
pub const ROOT: StateId = 0;

/// Errors from alphabet validation, automaton construction and matching.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("pattern {pattern}: symbol {} is not in the alphabet", fmt_byte(*byte))]
    InvalidPatternSymbol { pattern: usize, byte: u8 },

    #[error("pattern {0} is empty")]
    EmptyPattern(usize),

    #[error("text offset {offset}: symbol {} is not in the alphabet", fmt_byte(*byte))]
    InvalidTextSymbol { offset: usize, byte: u8 },

    #[error("sentinel {} collides with an alphabet symbol", fmt_byte(*.0))]
    SentinelInAlphabet(u8),

    #[error("alphabet symbol {} listed more than once", fmt_byte(*.0))]
    DuplicateSymbol(u8),

    #[error("alphabet has no symbols")]
    EmptyAlphabet,
}

/// Renders a byte as a readable symbol for diagnostics.
pub(crate) fn fmt_byte(byte: u8) -> String {
    if byte.is_ascii_graphic() {
        format!("'{}'", byte as char)
    } else {
        format!("0x{byte:02X}")
    }
}
