use alloc::collections::VecDeque;
use alloc::vec::Vec;

use crate::graph::{NodeId, WeightedGraph};
use crate::subset::NodeSubset;
use crate::Error;

/// Orders `set` so that every prefix induces a connected subgraph.
///
/// Breadth-first order inside `G_C` from the smallest member.
pub fn prefix_connected_order(g: &WeightedGraph, set: &NodeSubset) -> Result<Vec<NodeId>, Error> {
    let Some(root) = set.sorted().first().copied() else {
        return Ok(Vec::new());
    };
    let mut seen = NodeSubset::new(g.node_count());
    let mut order = Vec::with_capacity(set.len());
    let mut queue = VecDeque::from([root]);
    seen.insert(root);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for v in g.neighbor_ids(u) {
            if set.contains(v) && seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    if order.len() != set.len() {
        return Err(Error::DisconnectedSubset);
    }
    Ok(order)
}

/// True iff every prefix of `order` induces a connected subgraph.
pub fn is_prefix_connected(g: &WeightedGraph, order: &[NodeId]) -> bool {
    let mut prefix = NodeSubset::new(g.node_count());
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && g.neighbor_ids(v).all(|u| !prefix.contains(u)) {
            return false;
        }
        if !prefix.insert(v) {
            return false;
        }
    }
    true
}
