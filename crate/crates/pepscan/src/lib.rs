//! Multi-pattern string matching for peptide identification.
//!
//! The crate mirrors a hardware/software co-design of the Aho-Corasick
//! algorithm: a sparse edge-array engine whose per-character cost grows with
//! automaton fan-out (the software side), a dense transition-table engine
//! with constant work per character (the hardware side), a bus-functional
//! simulation of the memory-mapped matcher component, a VHDL code generator
//! for the dense machine, FASTA ingestion with tryptic digestion, and a
//! benchmark harness that reproduces published reference timings through a
//! calibrated cost model.

pub mod ac;
pub mod bench;
pub mod bio;
pub mod codegen;
pub mod hw;

pub use ac::{
    build_goto, match_naive, Alphabet, Automaton, MatchEvent, PatternId, PatternSet, StateId,
    WorkProfile,
};
pub use hw::{ComponentSim, CostModel};
