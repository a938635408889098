//! Component counting: `p(A)`, `q(A)` and connectivity of induced subgraphs.

use alloc::vec::Vec;

use crate::graph::{NodeId, WeightedGraph};
use crate::subset::NodeSubset;

/// Union-find with union by size.
///
/// [`DisjointSets::root`] is read-only so that marginal gains can be probed
/// against a shared state; [`DisjointSets::union`] compresses paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    pub fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: alloc::vec![1; len],
            sets: len,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of disjoint sets.
    pub fn set_count(&self) -> usize {
        self.sets
    }

    pub fn root(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn find(&mut self, x: usize) -> usize {
        let root = self.root(x);
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; returns false if already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.root(a) == self.root(b)
    }
}

/// Number of distinct roots among `items`, without mutating `sets`.
pub(crate) fn distinct_roots(sets: &DisjointSets, items: impl Iterator<Item = usize>) -> usize {
    let mut roots: Vec<usize> = items.map(|x| sets.root(x)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Counts components of the graph on `nodes` where `edge_ok(u, v)` decides
/// which edges of `g` may be used.
fn count_components(
    g: &WeightedGraph,
    nodes: impl Iterator<Item = NodeId>,
    in_scope: impl Fn(NodeId) -> bool,
    edge_ok: impl Fn(NodeId, NodeId) -> bool,
) -> usize {
    let mut seen = alloc::vec![false; g.node_count()];
    let mut stack = Vec::new();
    let mut components = 0;
    for start in nodes {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for v in g.neighbor_ids(u) {
                if !seen[v] && in_scope(v) && edge_ok(u, v) {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    components
}

/// `p(A)`: components of the subgraph induced by `set`; 0 for the empty set.
pub fn induced_components(g: &WeightedGraph, set: &NodeSubset) -> usize {
    count_components(g, set.iter(), |v| set.contains(v), |_, _| true)
}

/// `q(A)`: components of the spanning subgraph on all of `V` whose edges are
/// those with at least one endpoint in `set`. Untouched nodes are singletons.
pub fn covering_components(g: &WeightedGraph, set: &NodeSubset) -> usize {
    count_components(
        g,
        0..g.node_count(),
        |_| true,
        |u, v| set.contains(u) || set.contains(v),
    )
}

/// True iff `set` induces a connected subgraph; the empty set counts as connected.
pub fn is_connected_subset(g: &WeightedGraph, set: &NodeSubset) -> bool {
    induced_components(g, set) <= 1
}
