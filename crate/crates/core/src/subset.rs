//! Node subsets with O(1) membership and insertion-ordered iteration.

use alloc::vec::Vec;

use crate::graph::NodeId;

/// A subset of `{0, .., universe - 1}`.
///
/// Equality compares membership only; insertion order is ignored.
#[derive(Debug, Clone, Eq)]
pub struct NodeSubset {
    member: Vec<bool>,
    order: Vec<NodeId>,
}

impl NodeSubset {
    pub fn new(universe: usize) -> Self {
        Self {
            member: alloc::vec![false; universe],
            order: Vec::new(),
        }
    }

    pub fn full(universe: usize) -> Self {
        Self {
            member: alloc::vec![true; universe],
            order: (0..universe).collect(),
        }
    }

    /// Builds a subset from node ids; duplicates are ignored.
    ///
    /// Panics if a node is outside the universe.
    pub fn from_nodes(universe: usize, nodes: impl IntoIterator<Item = NodeId>) -> Self {
        let mut set = Self::new(universe);
        for v in nodes {
            set.insert(v);
        }
        set
    }

    /// Subset whose members are the set bits of `mask` (bit `i` is node `i`).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        debug_assert!(universe >= 64 || mask >> universe == 0);
        Self::from_nodes(universe, (0..universe.min(64)).filter(|i| mask >> i & 1 == 1))
    }

    /// Bitmask of the members, if the universe fits in 64 bits.
    pub fn to_mask(&self) -> Option<u64> {
        (self.universe() <= 64).then(|| self.order.iter().fold(0u64, |m, &v| m | 1 << v))
    }

    pub fn universe(&self) -> usize {
        self.member.len()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.member.get(v).copied().unwrap_or(false)
    }

    /// Adds `v`; returns false if it was already a member.
    pub fn insert(&mut self, v: NodeId) -> bool {
        assert!(v < self.universe(), "node {v} outside universe {}", self.universe());
        if self.member[v] {
            return false;
        }
        self.member[v] = true;
        self.order.push(v);
        true
    }

    /// Members in insertion order.
    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.order.iter().copied()
    }

    pub fn as_slice(&self) -> &[NodeId] {
        &self.order
    }

    /// Members in increasing id order.
    pub fn sorted(&self) -> Vec<NodeId> {
        (0..self.universe()).filter(|&v| self.member[v]).collect()
    }

    pub fn complement(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.universe()).filter(|&v| !self.member[v])
    }

    pub fn is_subset_of(&self, other: &NodeSubset) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn union(&self, other: &NodeSubset) -> NodeSubset {
        let mut out = self.clone();
        for v in other.iter() {
            out.insert(v);
        }
        out
    }

    pub fn with(&self, v: NodeId) -> NodeSubset {
        let mut out = self.clone();
        out.insert(v);
        out
    }
}

impl PartialEq for NodeSubset {
    fn eq(&self, other: &Self) -> bool {
        self.member == other.member
    }
}
