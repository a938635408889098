//! The greedy constructor: repeatedly add the candidate with the largest
//! positive marginal gain until none remains.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::{self, Rational};
use crate::bound::{BoundExpr, BoundReport};
use crate::graph::NodeId;
use crate::potential::Potential;
use crate::problem::Problem;
use crate::subset::NodeSubset;
use crate::Error;

/// Trace of one greedy run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyRun {
    /// `s_1, .., s_k` in pick order.
    pub picks: Vec<NodeId>,
    /// `Δ_{s_i} f(S_{i-1})` for every pick.
    pub marginals: Vec<Rational>,
    pub final_value: Rational,
    pub target: Rational,
    /// `final_value == target`.
    pub feasible: bool,
}

impl GreedyRun {
    pub fn len(&self) -> usize {
        self.picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.picks.is_empty()
    }

    /// First-step gain `δ_max`.
    pub fn delta_max(&self) -> Option<&Rational> {
        self.marginals.first()
    }

    /// Smallest positive gain `δ_min` over all picks.
    pub fn delta_min(&self) -> Option<&Rational> {
        self.marginals.iter().filter(|g| arith::is_positive(g)).min()
    }

    pub fn solution(&self, universe: usize) -> NodeSubset {
        NodeSubset::from_nodes(universe, self.picks.iter().copied())
    }
}

/// Runs the greedy constructor over `potential`, breaking ties by lowest id.
///
/// Stops when no candidate has a positive marginal gain. A stall below the
/// target is reported through [`GreedyRun::feasible`].
pub fn greedy_construct<P: Potential>(potential: &P) -> GreedyRun {
    let n = potential.universe();
    let mut state = potential.empty_state();
    let mut picks = Vec::new();
    let mut marginals = Vec::new();
    loop {
        let members = potential.state_members(&state);
        let mut best: Option<(NodeId, Rational)> = None;
        for x in (0..n).filter(|&x| !members.contains(x)) {
            let gain = potential.marginal(&state, x);
            if gain <= Rational::zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, b)| gain > *b) {
                best = Some((x, gain));
            }
        }
        let Some((x, gain)) = best else { break };
        potential.insert(&mut state, x);
        picks.push(x);
        marginals.push(gain);
    }
    let final_value = potential.state_value(&state).clone();
    let target = potential.target().clone();
    GreedyRun {
        feasible: final_value == target,
        picks,
        marginals,
        final_value,
        target,
    }
}

/// Re-evaluates every step from scratch and checks that each pick attained
/// the maximum marginal gain, with the lowest id among ties, and that the
/// recorded gains are exact.
pub fn is_greedy_trace<P: Potential>(potential: &P, run: &GreedyRun) -> bool {
    let n = potential.universe();
    let mut current = NodeSubset::new(n);
    for (&pick, recorded) in run.picks.iter().zip(&run.marginals) {
        let gains: Vec<Rational> = (0..n)
            .map(|u| {
                if current.contains(u) {
                    Rational::zero()
                } else {
                    potential.marginal_from_scratch(&current, u)
                }
            })
            .collect();
        let best = gains.iter().max().cloned().unwrap_or_else(Rational::zero);
        let first_best = gains.iter().position(|g| *g == best);
        if gains[pick] != *recorded || first_best != Some(pick) || best <= Rational::zero() {
            return false;
        }
        current.insert(pick);
    }
    let stalled = current
        .complement()
        .all(|u| potential.marginal_from_scratch(&current, u) <= Rational::zero());
    stalled && potential.value(&current) == run.final_value
}

/// Compares a feasible run against `bound · optimum + 1`.
pub fn ratio_report(
    problem: Option<Problem>,
    run: &GreedyRun,
    optimum: Option<usize>,
    bound: &BoundExpr,
) -> Result<BoundReport, Error> {
    if !run.feasible {
        return Err(Error::InfeasibleRun);
    }
    let greedy_size = run.len();
    Ok(BoundReport {
        problem,
        bound: bound.clone(),
        theoretical_ratio: bound.approx(),
        greedy_size,
        optimal_size: optimum,
        observed_ratio: optimum
            .filter(|&o| o > 0)
            .map(|o| arith::ratio(greedy_size as i64, o as i64)),
        verdict: optimum.map(|o| bound.certify(greedy_size, o)),
    })
}
