//! File formats, instance generation, reports and the command-line driver
//! built on `domgreedy-core`.

pub mod cli;
pub mod experiment;
pub mod format;
pub mod generate;
pub mod report;
pub mod solve;
