//! Enumeration of all unlabeled graphs on a handful of nodes.
//!
//! Graphs are encoded as edge bitmasks with pair `(i, j)`, `i < j`, at bit
//! `j·(j-1)/2 + i`. Isomorphism classes on `n` nodes are produced by attaching
//! a new node with every possible neighborhood to each class on `n - 1` nodes
//! and keeping the lexicographically smallest relabeling.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::WeightedGraph;

pub const MAX_NODES: usize = 7;

fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    1 << (j * (j - 1) / 2 + i)
}

fn edges_of(mask: u32, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j))).filter(move |&(i, j)| mask & pair_bit(i, j) != 0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = alloc::vec![0usize; n];
    out.push(perm.clone());
    let mut i = 0;
    // Heap's algorithm
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out.push(perm.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn canonical(mask: u32, n: usize, perms: &[Vec<usize>]) -> u32 {
    let edges: Vec<(usize, usize)> = edges_of(mask, n).collect();
    perms
        .iter()
        .map(|p| edges.iter().fold(0, |m, &(i, j)| m | pair_bit(p[i], p[j])))
        .min()
        .unwrap_or(0)
}

/// Canonical edge masks of every graph on `n` nodes, one per isomorphism class.
///
/// Panics if `n > MAX_NODES`.
pub fn graph_classes(n: usize) -> Vec<u32> {
    assert!(n <= MAX_NODES, "enumeration limited to {MAX_NODES} nodes");
    let mut classes = alloc::vec![0u32];
    for size in 1..=n {
        let perms = permutations(size);
        let new = size - 1;
        let mut next = BTreeSet::new();
        for &base in &classes {
            for nbrs in 0u32..1 << new {
                let mask = (0..new)
                    .filter(|i| nbrs >> i & 1 == 1)
                    .fold(base, |m, i| m | pair_bit(i, new));
                next.insert(canonical(mask, size, &perms));
            }
        }
        classes = next.into_iter().collect();
    }
    classes
}

fn mask_connected(mask: u32, n: usize) -> bool {
    if n == 0 {
        return true;
    }
    let mut reached = 1u32;
    loop {
        let mut grown = reached;
        for (i, j) in edges_of(mask, n) {
            if reached >> i & 1 == 1 || reached >> j & 1 == 1 {
                grown |= 1 << i | 1 << j;
            }
        }
        if grown == reached {
            return reached.count_ones() as usize == n;
        }
        reached = grown;
    }
}

/// Unit-weight graph from a mask produced by [`graph_classes`].
pub fn graph_from_mask(mask: u32, n: usize) -> WeightedGraph {
    WeightedGraph::unit(n, edges_of(mask, n)).expect("mask encodes a simple graph")
}

/// One unit-weight representative per isomorphism class of connected graphs on `n` nodes.
pub fn connected_graphs(n: usize) -> Vec<WeightedGraph> {
    graph_classes(n)
        .into_iter()
        .filter(|&m| mask_connected(m, n))
        .map(|m| graph_from_mask(m, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (0..=5).map(|n| graph_classes(n).len()).collect();
        assert_eq!(all, [1, 1, 2, 4, 11, 34]);
        let connected: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, [1, 1, 2, 6, 21]);
    }

    #[test]
    fn representatives_are_connected() {
        for g in connected_graphs(4) {
            assert!(g.is_connected());
            assert_eq!(g.node_count(), 4);
        }
    }

    #[test]
    fn heap_permutations() {
        assert_eq!(permutations(4).len(), 24);
        let distinct: BTreeSet<Vec<usize>> = permutations(4).into_iter().collect();
        assert_eq!(distinct.len(), 24);
    }
}
