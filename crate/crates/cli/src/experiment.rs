//! Batch runs over generated or loaded instances.

use domgreedy_core::{Error, WeightedGraph};
use rayon::prelude::*;

use crate::generate::{generate, GenError, GnpSpec};
use crate::report::InstanceRecord;
use crate::solve::{solve_instance, SolveConfig};

#[derive(Debug, Clone)]
pub enum InstanceSource {
    Generator { spec: GnpSpec, count: u64, seed: u64 },
    /// Pre-loaded graphs with a label each.
    Graphs(Vec<(String, WeightedGraph)>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExperimentError {
    #[error("instance {id}: {source}")]
    Generate { id: u64, source: GenError },
    #[error("instance {id}: {source}")]
    Solve { id: u64, source: Error },
}

impl ExperimentError {
    pub fn core_error(&self) -> Option<&Error> {
        match self {
            ExperimentError::Solve { source, .. } => Some(source),
            ExperimentError::Generate { .. } => None,
        }
    }
}

/// Solves every instance on the rayon pool; records come back in id order and
/// the reported error, if any, is the one with the lowest id.
pub fn run_experiment(cfg: &SolveConfig, source: &InstanceSource) -> Result<Vec<InstanceRecord>, ExperimentError> {
    let results: Vec<Result<InstanceRecord, ExperimentError>> = match source {
        InstanceSource::Generator { spec, count, seed } => (0..*count)
            .into_par_iter()
            .map(|id| {
                let inst = generate(spec, *seed, id).map_err(|source| ExperimentError::Generate { id, source })?;
                let label = format!("{}#seed={seed}#{id}", spec.describe());
                solve_instance(cfg, id, label, &inst.graph, inst.resamples)
                    .map_err(|source| ExperimentError::Solve { id, source })
            })
            .collect(),
        InstanceSource::Graphs(graphs) => graphs
            .par_iter()
            .enumerate()
            .map(|(i, (label, g))| {
                let id = i as u64;
                solve_instance(cfg, id, label.clone(), g, 0).map_err(|source| ExperimentError::Solve { id, source })
            })
            .collect(),
    };
    results.into_iter().collect()
}
