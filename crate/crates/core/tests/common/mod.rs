#![allow(dead_code)]

use domgreedy_core::arith::{self, Rational};
use domgreedy_core::{NodeId, NodeSubset, Potential, Problem, ProblemParams, WeightedGraph};
use proptest::prelude::*;

pub fn path(n: usize) -> WeightedGraph {
    WeightedGraph::unit(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> WeightedGraph {
    WeightedGraph::unit(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn star(leaves: usize) -> WeightedGraph {
    WeightedGraph::unit(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

pub fn complete(n: usize) -> WeightedGraph {
    WeightedGraph::unit(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn set(n: usize, nodes: &[NodeId]) -> NodeSubset {
    NodeSubset::from_nodes(n, nodes.iter().copied())
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = NodeSubset> {
    (0..1u64 << n).map(move |m| NodeSubset::from_mask(n, m))
}

/// Graph from an upper-triangle list of optional `(numer, denom)` weights.
pub fn graph_from_pairs(n: usize, pairs: &[Option<(i64, i64)>]) -> WeightedGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if let Some((p, q)) = pairs[k] {
                edges.push((u, v, arith::ratio(p, q)));
            }
            k += 1;
        }
    }
    WeightedGraph::from_edges(n, edges).unwrap()
}

/// Random simple graph on `lo..=hi` nodes with weights `p/q`, `1 <= p, q <= max_denom`.
pub fn weighted_graph(lo: usize, hi: usize, max_denom: i64) -> impl Strategy<Value = WeightedGraph> {
    (lo..=hi).prop_flat_map(move |n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(
            proptest::option::weighted(0.6, (1..=max_denom, 1..=max_denom)),
            pairs,
        )
        .prop_map(move |pairs| graph_from_pairs(n, &pairs))
    })
}

pub fn connected_weighted_graph(lo: usize, hi: usize, max_denom: i64) -> impl Strategy<Value = WeightedGraph> {
    weighted_graph(lo, hi, max_denom).prop_filter("connected", |g| g.is_connected())
}

pub fn unit_graph(lo: usize, hi: usize) -> impl Strategy<Value = WeightedGraph> {
    weighted_graph(lo, hi, 1)
}

/// Greedy constructor driven only by from-scratch values: the reference the
/// incremental engine is checked against.
pub fn naive_greedy<P: Potential>(f: &P) -> (Vec<NodeId>, Vec<Rational>) {
    let n = f.universe();
    let mut current = NodeSubset::new(n);
    let (mut picks, mut gains) = (Vec::new(), Vec::new());
    loop {
        let base = f.value(&current);
        let mut best: Option<(NodeId, Rational)> = None;
        for x in current.complement() {
            let gain = f.value(&current.with(x)) - &base;
            if gain > arith::zero() && best.as_ref().is_none_or(|(_, b)| gain > *b) {
                best = Some((x, gain));
            }
        }
        match best {
            Some((x, gain)) => {
                current.insert(x);
                picks.push(x);
                gains.push(gain);
            }
            None => return (picks, gains),
        }
    }
}

/// Problems paired with parameters for exhaustive sweeps.
pub fn problem_grid() -> Vec<(Problem, ProblemParams)> {
    let mut out = vec![(Problem::Tds, ProblemParams::default())];
    for m in 1..=3 {
        out.push((Problem::Mtds, ProblemParams::with_m(m).unwrap()));
    }
    for p in [Problem::Wppids, Problem::Wppitds, Problem::Wppicds] {
        out.push((p, ProblemParams::default()));
    }
    out
}
