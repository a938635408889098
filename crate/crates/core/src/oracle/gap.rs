//! Empirical submodularity gap `ε̂`.
//!
//! Unconditional mode measures `max Δ_x f(B) - Δ_x f(A)` over `A ⊆ B ⊆ V`,
//! `x ∉ B`. Conditional mode measures `max Δ_x f(A ∪ B) - Δ_x f(A)` over all
//! `A ⊆ V`, connected `B` and `x ∉ B`.

use alloc::vec::Vec;

use num_traits::Zero;
use rand::Rng;

use crate::arith::Rational;
use crate::components::is_connected_subset;
use crate::graph::{NodeId, WeightedGraph};
use crate::potential::Potential;
use crate::subset::NodeSubset;
use crate::Error;

/// Largest `n` accepted by the exhaustive scan.
pub const EXHAUSTIVE_GAP_LIMIT: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapWitness {
    pub a: NodeSubset,
    pub b: NodeSubset,
    pub x: NodeId,
}

impl GapWitness {
    /// Recomputes the gap of this triple from scratch.
    pub fn gap<P: Potential>(&self, potential: &P, conditional: bool) -> Rational {
        let upper = if conditional { self.a.union(&self.b) } else { self.b.clone() };
        potential.marginal_from_scratch(&upper, self.x) - potential.marginal_from_scratch(&self.a, self.x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapScanResult {
    pub max_gap: Rational,
    /// First triple attaining `max_gap` in scan order; `None` if nothing was scanned.
    pub witness: Option<GapWitness>,
    pub conditional: bool,
    pub exhaustive: bool,
    pub triples_scanned: u64,
}

struct Tracker {
    best: Option<(Rational, u64, u64, NodeId)>,
    scanned: u64,
}

impl Tracker {
    fn observe(&mut self, gap: Rational, a: u64, b: u64, x: NodeId) {
        self.scanned += 1;
        if self.best.as_ref().is_none_or(|(g, ..)| gap > *g) {
            self.best = Some((gap, a, b, x));
        }
    }
}

/// Exhaustive scan over every triple; requires `n <= EXHAUSTIVE_GAP_LIMIT`.
pub fn gap_scan<P: Potential>(
    potential: &P,
    g: &WeightedGraph,
    conditional: bool,
) -> Result<GapScanResult, Error> {
    let n = potential.universe();
    if n > EXHAUSTIVE_GAP_LIMIT {
        return Err(Error::SizeLimitExceeded {
            size: n,
            limit: EXHAUSTIVE_GAP_LIMIT,
        });
    }
    let full = (1u64 << n) - 1;
    let values: Vec<Rational> = (0..=full)
        .map(|mask| potential.value(&NodeSubset::from_mask(n, mask)))
        .collect();
    let delta = |set: u64, x: NodeId| &values[(set | 1 << x) as usize] - &values[set as usize];
    let mut t = Tracker { best: None, scanned: 0 };
    if conditional {
        let connected: Vec<u64> = (0..=full)
            .filter(|&b| is_connected_subset(g, &NodeSubset::from_mask(n, b)))
            .collect();
        for a in 0..=full {
            for &b in &connected {
                for x in (0..n).filter(|x| b >> x & 1 == 0) {
                    t.observe(delta(a | b, x) - delta(a, x), a, b, x);
                }
            }
        }
    } else {
        for b in 0..=full {
            let mut a = b;
            loop {
                for x in (0..n).filter(|x| b >> x & 1 == 0) {
                    t.observe(delta(b, x) - delta(a, x), a, b, x);
                }
                if a == 0 {
                    break;
                }
                a = (a - 1) & b;
            }
        }
    }
    Ok(finish(t, n, conditional, true))
}

/// Scans `samples` random triples. Conditional samples draw `B` by growing a
/// random connected set from a random start node.
pub fn gap_scan_sampled<P: Potential, R: Rng>(
    potential: &P,
    g: &WeightedGraph,
    conditional: bool,
    samples: u64,
    rng: &mut R,
) -> GapScanResult {
    let n = potential.universe();
    let mut best: Option<(Rational, GapWitness)> = None;
    let mut scanned = 0;
    if n > 0 {
        while scanned < samples {
            let (a, b) = if conditional {
                (random_subset(n, rng), random_connected(g, rng))
            } else {
                random_chain(n, rng)
            };
            let outside: Vec<NodeId> = b.complement().collect();
            if outside.is_empty() {
                continue;
            }
            let x = outside[rng.gen_range(0..outside.len())];
            let witness = GapWitness { a, b, x };
            let gap = witness.gap(potential, conditional);
            scanned += 1;
            if best.as_ref().is_none_or(|(g, _)| gap > *g) {
                best = Some((gap, witness));
            }
        }
    }
    let (max_gap, witness) = match best {
        Some((gap, w)) => (gap, Some(w)),
        None => (Rational::zero(), None),
    };
    GapScanResult {
        max_gap,
        witness,
        conditional,
        exhaustive: false,
        triples_scanned: scanned,
    }
}

fn finish(t: Tracker, n: usize, conditional: bool, exhaustive: bool) -> GapScanResult {
    let (max_gap, witness) = match t.best {
        Some((gap, a, b, x)) => (
            gap,
            Some(GapWitness {
                a: NodeSubset::from_mask(n, a),
                b: NodeSubset::from_mask(n, b),
                x,
            }),
        ),
        None => (Rational::zero(), None),
    };
    GapScanResult {
        max_gap,
        witness,
        conditional,
        exhaustive,
        triples_scanned: t.scanned,
    }
}

fn random_subset<R: Rng>(n: usize, rng: &mut R) -> NodeSubset {
    NodeSubset::from_nodes(n, (0..n).filter(|_| rng.gen_bool(0.5)))
}

/// Random `A ⊆ B`: each node lands in `A`, `B \ A` or outside with equal odds.
fn random_chain<R: Rng>(n: usize, rng: &mut R) -> (NodeSubset, NodeSubset) {
    let mut a = NodeSubset::new(n);
    let mut b = NodeSubset::new(n);
    for v in 0..n {
        match rng.gen_range(0..3) {
            0 => {
                a.insert(v);
                b.insert(v);
            }
            1 => {
                b.insert(v);
            }
            _ => {}
        }
    }
    (a, b)
}

fn random_connected<R: Rng>(g: &WeightedGraph, rng: &mut R) -> NodeSubset {
    let n = g.node_count();
    let mut set = NodeSubset::new(n);
    let size = rng.gen_range(0..=n);
    if size == 0 {
        return set;
    }
    set.insert(rng.gen_range(0..n));
    while set.len() < size {
        let mut frontier: Vec<NodeId> = set
            .iter()
            .flat_map(|v| g.neighbor_ids(v))
            .filter(|&u| !set.contains(u))
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        if frontier.is_empty() {
            break;
        }
        set.insert(frontier[rng.gen_range(0..frontier.len())]);
    }
    set
}
