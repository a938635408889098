use alloc::vec::Vec;

use crate::graph::{NodeId, WeightedGraph};
use crate::subset::NodeSubset;
use crate::threshold::ThresholdConfig;
use crate::Error;

/// Outcome of a linear-threshold diffusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diffusion {
    pub activated: NodeSubset,
    /// Number of rounds that activated at least one node.
    pub rounds: usize,
    /// `trace[i]` holds the nodes activated in round `i + 1`, in id order.
    pub trace: Vec<Vec<NodeId>>,
}

/// Synchronous linear-threshold closure of `seeds`.
///
/// In each round every inactive `v` with `W_active(v) >= θ_v` activates, all
/// against the active set of the previous round. Nodes with `θ_v = 0`
/// (isolated nodes) activate in the first round.
pub fn lt_closure(g: &WeightedGraph, seeds: &NodeSubset, t: &ThresholdConfig) -> Result<Diffusion, Error> {
    t.check(g)?;
    let thresholds = t.thresholds(g);
    let mut active = seeds.clone();
    let mut trace = Vec::new();
    loop {
        let newly: Vec<NodeId> = active
            .complement()
            .filter(|&v| g.weight_toward(v, &active) >= thresholds[v])
            .collect();
        if newly.is_empty() {
            break;
        }
        for &v in &newly {
            active.insert(v);
        }
        trace.push(newly);
    }
    Ok(Diffusion {
        activated: active,
        rounds: trace.len(),
        trace,
    })
}
