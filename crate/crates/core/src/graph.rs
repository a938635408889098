//! Immutable undirected graph with exact positive rational edge weights.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::subset::NodeSubset;
use crate::Error;

/// Dense 0-based node identifier.
pub type NodeId = usize;

/// Whether every edge weight equals 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    Unit,
    Rational,
}

/// Undirected simple graph `G = (V, E, w)` with `w: E -> Q+`.
///
/// Adjacency lists are sorted by neighbor id and store each edge in both
/// directions with the same weight. The graph cannot be mutated once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    adjacency: Vec<Vec<(NodeId, Rational)>>,
    weighted_degree: Vec<Rational>,
    edge_count: usize,
    mode: WeightMode,
}

impl WeightedGraph {
    /// Builds a graph from an undirected edge list.
    ///
    /// Rejects self-loops, parallel edges (in either orientation), weights
    /// `<= 0` and endpoints outside `0..node_count`.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (NodeId, NodeId, Rational)>,
    {
        let mut adjacency: Vec<Vec<(NodeId, Rational)>> = alloc::vec![Vec::new(); node_count];
        let mut edge_count = 0;
        for (u, v, w) in edges {
            check_edge(node_count, u, v, &w)?;
            adjacency[u].push((v, w.clone()));
            adjacency[v].push((u, w));
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_by_key(|e| e.0);
            if let Some(pair) = list.windows(2).find(|p| p[0].0 == p[1].0) {
                let v = pair[0].0;
                return Err(Error::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
        let weighted_degree = adjacency
            .iter()
            .map(|list| list.iter().map(|(_, w)| w).sum())
            .collect();
        let mode = if adjacency.iter().flatten().all(|(_, w)| w.is_one()) {
            WeightMode::Unit
        } else {
            WeightMode::Rational
        };
        Ok(Self {
            adjacency,
            weighted_degree,
            edge_count,
            mode,
        })
    }

    /// Unit-weight graph from plain node pairs.
    pub fn unit<I>(node_count: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        Self::from_edges(
            node_count,
            edges.into_iter().map(|(u, v)| (u, v, arith::one())),
        )
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn weight_mode(&self) -> WeightMode {
        self.mode
    }

    pub fn is_unit_weight(&self) -> bool {
        self.mode == WeightMode::Unit
    }

    /// Neighbors of `v` with edge weights, sorted by neighbor id.
    pub fn neighbors(&self, v: NodeId) -> &[(NodeId, Rational)] {
        &self.adjacency[v]
    }

    pub fn neighbor_ids(&self, v: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.adjacency[v].iter().map(|(u, _)| *u)
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    /// Maximum degree `Δ` (0 for an empty or edgeless graph).
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `W(v)`, the total weight of edges incident to `v`.
    pub fn weighted_degree(&self, v: NodeId) -> &Rational {
        &self.weighted_degree[v]
    }

    /// `W = max_v W(v)` (0 for an edgeless graph).
    pub fn max_weighted_degree(&self) -> Rational {
        self.weighted_degree
            .iter()
            .max()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn edge_weight(&self, u: NodeId, v: NodeId) -> Option<&Rational> {
        let list = &self.adjacency[u];
        list.binary_search_by(|(x, _)| x.cmp(&v))
            .ok()
            .map(|i| &list[i].1)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.edge_weight(u, v).is_some()
    }

    /// Every edge once, as `(u, v, w)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, &Rational)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |(v, _)| u < *v)
                .map(move |(v, w)| (u, *v, w))
        })
    }

    pub fn isolated_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.node_count()).filter(|&v| self.adjacency[v].is_empty())
    }

    pub fn has_isolated_nodes(&self) -> bool {
        self.isolated_nodes().next().is_some()
    }

    /// True when the whole graph is connected (the empty graph counts as connected).
    pub fn is_connected(&self) -> bool {
        crate::components::is_connected_subset(self, &NodeSubset::full(self.node_count()))
    }

    /// `W_A(v)`: total weight of the edges from `v` to members of `set`.
    pub fn weight_toward(&self, v: NodeId, set: &NodeSubset) -> Rational {
        self.adjacency[v]
            .iter()
            .filter(|(u, _)| set.contains(*u))
            .map(|(_, w)| w)
            .sum()
    }

    /// `|N_A(v)|`: number of neighbors of `v` inside `set`.
    pub fn neighbors_in(&self, v: NodeId, set: &NodeSubset) -> usize {
        self.adjacency[v]
            .iter()
            .filter(|(u, _)| set.contains(*u))
            .count()
    }
}

fn check_edge(node_count: usize, u: NodeId, v: NodeId, w: &Rational) -> Result<(), Error> {
    for node in [u, v] {
        if node >= node_count {
            return Err(Error::NodeOutOfRange { node, node_count });
        }
    }
    if u == v {
        return Err(Error::SelfLoop { node: u });
    }
    if *w <= Rational::zero() {
        return Err(Error::NonPositiveWeight {
            u: u.min(v),
            v: u.max(v),
        });
    }
    Ok(())
}
