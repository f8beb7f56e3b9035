pub mod bench;
pub mod build;
pub mod codegen;
pub mod digest;
pub mod match_cmd;
pub mod simulate;
pub mod stats;
pub mod synth;
