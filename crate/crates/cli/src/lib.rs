//! Experiment orchestration behind the `evoscape` binary.
//!
//! The library half exists so the pipeline (config parsing, sweep runner,
//! plot emission) is callable and testable in-process; `main.rs` only maps
//! CLI flags onto it.

pub mod config;
pub mod experiment;
pub mod plot;
