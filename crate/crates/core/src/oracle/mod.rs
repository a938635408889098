//! Independent ground truth for the solvers.
//!
//! Nothing here goes through the potential functions except [`gap`], whose
//! whole job is to measure them.

mod brute;
mod diffusion;
pub mod gap;
mod ms;
mod order;
mod verify;

pub use brute::{brute_force_min, DEFAULT_ORACLE_LIMIT};
pub use diffusion::{lt_closure, Diffusion};
pub use gap::{gap_scan, gap_scan_sampled, GapScanResult, GapWitness, EXHAUSTIVE_GAP_LIMIT};
pub use ms::{ms_oracle, MS_DEGREE_LIMIT};
pub use order::{is_prefix_connected, prefix_connected_order};
pub use verify::verify;
