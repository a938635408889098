//! Potential functions whose maximum characterizes feasible solutions.
//!
//! Every shipped potential is zero on the empty set and non-decreasing.
//! [`DominationPotential::value`] evaluates a set from scratch, while
//! [`PotentialState`] keeps per-node progress so that a marginal gain costs
//! `O(deg(x))` (plus a handful of union-find probes for the connected
//! variant).

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::components::{self, distinct_roots, DisjointSets};
use crate::graph::{NodeId, WeightedGraph};
use crate::problem::{Problem, ProblemParams};
use crate::subset::NodeSubset;
use crate::threshold::{graph_lcm, ThresholdConfig};
use crate::Error;

/// A set function `f: 2^V -> Q` with incremental marginal evaluation.
pub trait Potential {
    type State: Clone;

    fn name(&self) -> &str;

    /// Size of the ground set `V`.
    fn universe(&self) -> usize;

    /// The value that characterizes feasibility.
    fn target(&self) -> &Rational;

    /// True when the potential is only approximately submodular with respect
    /// to connected sets.
    fn connectivity_conditional(&self) -> bool {
        false
    }

    /// `f(A)`, computed from scratch.
    fn value(&self, set: &NodeSubset) -> Rational;

    fn empty_state(&self) -> Self::State;

    /// `f(A ∪ {x}) - f(A)` for the set held by `state`; zero if `x ∈ A`.
    fn marginal(&self, state: &Self::State, x: NodeId) -> Rational;

    /// Adds `x` to the set held by `state`.
    fn insert(&self, state: &mut Self::State, x: NodeId);

    fn state_value<'s>(&self, state: &'s Self::State) -> &'s Rational;

    fn state_members<'s>(&self, state: &'s Self::State) -> &'s NodeSubset;

    /// State reached by inserting the members of `set` in insertion order.
    fn state_of(&self, set: &NodeSubset) -> Self::State {
        let mut state = self.empty_state();
        for v in set.iter() {
            self.insert(&mut state, v);
        }
        state
    }

    /// Marginal gain evaluated from two from-scratch values.
    fn marginal_from_scratch(&self, set: &NodeSubset, x: NodeId) -> Rational {
        self.value(&set.with(x)) - self.value(set)
    }
}

/// One of the five domination potentials over a borrowed graph.
#[derive(Debug, Clone)]
pub struct DominationPotential<'g> {
    graph: &'g WeightedGraph,
    problem: Problem,
    m: usize,
    thresholds: Vec<Rational>,
    lcm: BigInt,
    inv_lcm: Rational,
    target: Rational,
}

/// Incremental bookkeeping for [`DominationPotential`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialState {
    members: NodeSubset,
    /// `|N_A(v)|`
    inside_count: Vec<usize>,
    /// `W_A(v)`; only maintained for the weighted variants.
    inside_weight: Vec<Rational>,
    /// Components of `G_A`; non-members stay singletons.
    induced: DisjointSets,
    /// Components of the spanning subgraph of edges touching `A`.
    covering: DisjointSets,
    value: Rational,
}

impl PotentialState {
    pub fn members(&self) -> &NodeSubset {
        &self.members
    }

    pub fn inside_count(&self, v: NodeId) -> usize {
        self.inside_count[v]
    }

    pub fn inside_weight(&self, v: NodeId) -> Option<&Rational> {
        self.inside_weight.get(v)
    }

    /// `p(A)` as tracked by the union-find.
    pub fn induced_components(&self) -> usize {
        self.induced.set_count() - (self.members.universe() - self.members.len())
    }

    /// `q(A)` as tracked by the union-find.
    pub fn covering_components(&self) -> usize {
        self.covering.set_count()
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }
}

impl<'g> DominationPotential<'g> {
    pub fn new(graph: &'g WeightedGraph, problem: Problem, params: &ProblemParams) -> Result<Self, Error> {
        if params.m == 0 {
            return Err(Error::InvalidFaultTolerance);
        }
        let n = graph.node_count();
        let (thresholds, lcm) = if problem.is_weighted() {
            params.threshold.check(graph)?;
            (
                params.threshold.thresholds(graph),
                graph_lcm(graph, &params.threshold),
            )
        } else {
            (Vec::new(), BigInt::one())
        };
        if problem == Problem::Wppicds && (n < 2 || !graph.is_connected()) {
            return Err(Error::InfeasibleInstance);
        }
        let inv_lcm = arith::reciprocal(&lcm);
        let h_max: Rational = thresholds.iter().sum();
        let n_rat = arith::int(n as i64);
        let target = match problem {
            Problem::Tds => n_rat,
            Problem::Mtds => arith::int((params.m * n) as i64),
            Problem::Wppids => h_max,
            Problem::Wppitds => h_max + &inv_lcm * n_rat,
            Problem::Wppicds => h_max + &inv_lcm * (n_rat - arith::int(2)),
        };
        Ok(Self {
            graph,
            problem,
            m: params.m,
            thresholds,
            lcm,
            inv_lcm,
            target,
        })
    }

    /// Total domination: `f(A) = |{v : N_A(v) ≠ ∅}|`.
    pub fn tds(graph: &'g WeightedGraph) -> Self {
        Self::new(graph, Problem::Tds, &ProblemParams::default()).expect("tds has no preconditions")
    }

    /// Fault-tolerant total domination with tolerance `m >= 1`.
    pub fn ft_total(graph: &'g WeightedGraph, m: usize) -> Result<Self, Error> {
        Self::new(graph, Problem::Mtds, &ProblemParams::with_m(m)?)
    }

    pub fn wppids(graph: &'g WeightedGraph, t: &ThresholdConfig) -> Result<Self, Error> {
        Self::new(graph, Problem::Wppids, &ProblemParams::new(1, t.clone())?)
    }

    pub fn wppitds(graph: &'g WeightedGraph, t: &ThresholdConfig) -> Result<Self, Error> {
        Self::new(graph, Problem::Wppitds, &ProblemParams::new(1, t.clone())?)
    }

    pub fn wppicds(graph: &'g WeightedGraph, t: &ThresholdConfig) -> Result<Self, Error> {
        Self::new(graph, Problem::Wppicds, &ProblemParams::new(1, t.clone())?)
    }

    pub fn graph(&self) -> &'g WeightedGraph {
        self.graph
    }

    pub fn problem(&self) -> Problem {
        self.problem
    }

    /// `θ_v` for the weighted variants.
    pub fn threshold(&self, v: NodeId) -> Option<&Rational> {
        self.thresholds.get(v)
    }

    /// `L` for the weighted variants, 1 otherwise.
    pub fn lcm(&self) -> &BigInt {
        &self.lcm
    }

    fn uses_weights(&self) -> bool {
        self.problem.is_weighted()
    }

    /// `h(A)`: capped progress of every node toward its threshold.
    fn partial_influence_value(&self, set: &NodeSubset) -> Rational {
        (0..self.graph.node_count())
            .map(|v| {
                let theta = &self.thresholds[v];
                if set.contains(v) {
                    return theta.clone();
                }
                let w = self.graph.weight_toward(v, set);
                if w >= *theta {
                    theta.clone()
                } else {
                    w
                }
            })
            .sum()
    }

    fn h_gain(&self, state: &PotentialState, x: NodeId) -> Rational {
        let weights = &state.inside_weight;
        let theta_x = &self.thresholds[x];
        let mut gain = theta_x - capped(&weights[x], theta_x);
        for (u, w) in self.graph.neighbors(x) {
            if state.members.contains(*u) {
                continue;
            }
            let theta = &self.thresholds[*u];
            let before = capped(&weights[*u], theta);
            if before < *theta {
                gain += capped(&(&weights[*u] + w), theta) - before;
            }
        }
        gain
    }

    /// `|N_{V \ K(A)}(x)|` for total domination.
    fn tds_gain(&self, state: &PotentialState, x: NodeId) -> usize {
        self.graph
            .neighbor_ids(x)
            .filter(|&u| state.inside_count[u] == 0)
            .count()
    }

    fn ft_gain(&self, state: &PotentialState, x: NodeId) -> usize {
        let m = self.m;
        let own = ft_level(m, true, state.inside_count[x]) - ft_level(m, false, state.inside_count[x]);
        let neighbors: usize = self
            .graph
            .neighbor_ids(x)
            .map(|u| {
                let inside = state.members.contains(u);
                let c = state.inside_count[u];
                ft_level(m, inside, c + 1) - ft_level(m, inside, c)
            })
            .sum();
        own + neighbors
    }

    /// `|V| - q(A) - p(A)` increment, as an integer that may be negative.
    fn connectivity_gain(&self, state: &PotentialState, x: NodeId) -> i64 {
        let merged_covering =
            distinct_roots(&state.covering, core::iter::once(x).chain(self.graph.neighbor_ids(x)));
        let merged_induced = distinct_roots(
            &state.induced,
            self.graph.neighbor_ids(x).filter(|&u| state.members.contains(u)),
        );
        merged_covering as i64 + merged_induced as i64 - 2
    }
}

fn capped(value: &Rational, cap: &Rational) -> Rational {
    if value >= cap {
        cap.clone()
    } else {
        value.clone()
    }
}

/// `m_A(v)` from the node's membership and its number of neighbors in `A`.
fn ft_level(m: usize, in_set: bool, inside: usize) -> usize {
    match (in_set, inside) {
        (true, 0) => m - 1,
        (true, _) => m,
        (false, c) => c.min(m),
    }
}

impl Potential for DominationPotential<'_> {
    type State = PotentialState;

    fn name(&self) -> &str {
        self.problem.name()
    }

    fn universe(&self) -> usize {
        self.graph.node_count()
    }

    fn target(&self) -> &Rational {
        &self.target
    }

    fn connectivity_conditional(&self) -> bool {
        self.problem == Problem::Wppicds
    }

    fn value(&self, set: &NodeSubset) -> Rational {
        let g = self.graph;
        let n = g.node_count();
        let total = || (0..n).filter(|&v| g.neighbors_in(v, set) > 0).count();
        match self.problem {
            Problem::Tds => arith::int(total() as i64),
            Problem::Mtds => {
                let sum: usize = (0..n)
                    .map(|v| ft_level(self.m, set.contains(v), g.neighbors_in(v, set)))
                    .sum();
                arith::int(sum as i64)
            }
            Problem::Wppids => self.partial_influence_value(set),
            Problem::Wppitds => {
                self.partial_influence_value(set) + &self.inv_lcm * arith::int(total() as i64)
            }
            Problem::Wppicds => {
                let q = components::covering_components(g, set);
                let p = components::induced_components(g, set);
                let c = n as i64 - q as i64 - p as i64;
                self.partial_influence_value(set) + &self.inv_lcm * arith::int(c)
            }
        }
    }

    fn empty_state(&self) -> PotentialState {
        let n = self.graph.node_count();
        PotentialState {
            members: NodeSubset::new(n),
            inside_count: alloc::vec![0; n],
            inside_weight: if self.uses_weights() {
                alloc::vec![Rational::zero(); n]
            } else {
                Vec::new()
            },
            induced: DisjointSets::new(n),
            covering: DisjointSets::new(n),
            value: Rational::zero(),
        }
    }

    fn marginal(&self, state: &PotentialState, x: NodeId) -> Rational {
        if state.members.contains(x) {
            return Rational::zero();
        }
        match self.problem {
            Problem::Tds => arith::int(self.tds_gain(state, x) as i64),
            Problem::Mtds => arith::int(self.ft_gain(state, x) as i64),
            Problem::Wppids => self.h_gain(state, x),
            Problem::Wppitds => {
                self.h_gain(state, x) + &self.inv_lcm * arith::int(self.tds_gain(state, x) as i64)
            }
            Problem::Wppicds => {
                self.h_gain(state, x) + &self.inv_lcm * arith::int(self.connectivity_gain(state, x))
            }
        }
    }

    fn insert(&self, state: &mut PotentialState, x: NodeId) {
        if state.members.contains(x) {
            return;
        }
        let gain = self.marginal(state, x);
        state.value += gain;
        state.members.insert(x);
        let weighted = self.uses_weights();
        for (u, w) in self.graph.neighbors(x) {
            state.inside_count[*u] += 1;
            if weighted {
                state.inside_weight[*u] += w;
            }
            state.covering.union(x, *u);
            if state.members.contains(*u) {
                state.induced.union(x, *u);
            }
        }
    }

    fn state_value<'s>(&self, state: &'s PotentialState) -> &'s Rational {
        &state.value
    }

    fn state_members<'s>(&self, state: &'s PotentialState) -> &'s NodeSubset {
        &state.members
    }
}

/// `K(A)` for total domination: nodes with at least one neighbor in `A`.
pub fn total_satisfied(g: &WeightedGraph, set: &NodeSubset) -> NodeSubset {
    NodeSubset::from_nodes(
        g.node_count(),
        (0..g.node_count()).filter(|&v| g.neighbors_in(v, set) > 0),
    )
}

/// `K(A)` for fault-tolerant total domination: members with a neighbor in
/// `A`, and non-members with at least `m` neighbors in `A`.
pub fn ft_satisfied(g: &WeightedGraph, m: usize, set: &NodeSubset) -> NodeSubset {
    NodeSubset::from_nodes(
        g.node_count(),
        (0..g.node_count()).filter(|&v| {
            let c = g.neighbors_in(v, set);
            if set.contains(v) {
                c > 0
            } else {
                c >= m
            }
        }),
    )
}

/// `t_A(x)`: the gain of `x`'s own term when `x` joins `A` (`x ∉ A`).
pub fn ft_self_gain(g: &WeightedGraph, m: usize, set: &NodeSubset, x: NodeId) -> usize {
    if ft_satisfied(g, m, set).contains(x) {
        return 0;
    }
    match g.neighbors_in(x, set) {
        0 => m - 1,
        c => m - c,
    }
}

/// `|N_{V \ K}(x)|`.
pub fn neighbors_outside(g: &WeightedGraph, satisfied: &NodeSubset, x: NodeId) -> usize {
    g.neighbor_ids(x).filter(|&u| !satisfied.contains(u)).count()
}
