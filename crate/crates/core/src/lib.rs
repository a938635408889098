//! Greedy set-function maximization for domination problems on weighted graphs.
//!
//! The crate ships five potential functions whose maximum characterizes a
//! feasible solution:
//!
//! * total domination (TDS),
//! * fault-tolerant total domination (m-TDS),
//! * weighted partial positive influence domination (WPPIDS), with its total
//!   (WPPITDS) and connected (WPPICDS) variants.
//!
//! [`greedy::greedy_construct`] runs the greedy constructor over any
//! [`Potential`], and [`bound`] turns graph parameters into the matching
//! logarithmic approximation ratio. The [`oracle`] module carries the
//! independent ground truth: definition-level predicates, brute-force
//! minimum solvers, exhaustive submodularity-gap scans, the `ms(v)` oracle,
//! linear-threshold diffusion and prefix-connected orderings.
//!
//! All values are exact rationals; floating point only appears when a
//! logarithmic bound is reported.
#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

pub mod arith;
pub mod bound;
pub mod components;
mod error;
pub mod graph;
pub mod greedy;
pub mod oracle;
pub mod potential;
pub mod problem;
pub mod small_graphs;
pub mod subset;
pub mod threshold;

pub use arith::Rational;
pub use bound::{theoretical_bound, BoundExpr, BoundReport, BoundVerdict};
pub use error::Error;
pub use graph::{NodeId, WeightMode, WeightedGraph};
pub use greedy::{greedy_construct, ratio_report, GreedyRun};
pub use potential::{DominationPotential, Potential, PotentialState};
pub use problem::{Problem, ProblemParams};
pub use subset::NodeSubset;
pub use threshold::ThresholdConfig;

pub type Result<T, E = Error> = core::result::Result<T, E>;
