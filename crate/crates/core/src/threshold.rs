//! Activation thresholds `θ_v` and the denominator machinery `l(v)`, `L`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::graph::{NodeId, WeightedGraph};
use crate::Error;

/// How `θ_v` is derived from `W(v)`.
///
/// `θ_v = fraction · W(v)`, or `⌈fraction · W(v)⌉` in ceiling mode. Ceiling
/// mode is only accepted on unit-weight graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdConfig {
    fraction: Rational,
    ceiling: bool,
}

impl ThresholdConfig {
    pub fn new(fraction: Rational, ceiling: bool) -> Result<Self, Error> {
        if fraction <= Rational::zero() || fraction > Rational::one() {
            return Err(Error::InvalidFraction);
        }
        Ok(Self { fraction, ceiling })
    }

    /// Majority threshold `W(v) / 2`.
    pub fn half() -> Self {
        Self {
            fraction: arith::ratio(1, 2),
            ceiling: false,
        }
    }

    pub fn fraction(&self) -> &Rational {
        &self.fraction
    }

    pub fn ceiling(&self) -> bool {
        self.ceiling
    }

    /// Threshold for a node of weighted degree `weighted_degree`.
    pub fn apply(&self, weighted_degree: &Rational) -> Rational {
        let raw = &self.fraction * weighted_degree;
        if self.ceiling {
            raw.ceil()
        } else {
            raw
        }
    }

    /// Rejects ceiling mode on graphs with non-unit weights.
    pub fn check(&self, g: &WeightedGraph) -> Result<(), Error> {
        if self.ceiling && !g.is_unit_weight() && g.edge_count() > 0 {
            return Err(Error::CeilingRequiresUnitWeights);
        }
        Ok(())
    }

    /// `θ_v`; zero for isolated nodes.
    pub fn threshold(&self, g: &WeightedGraph, v: NodeId) -> Rational {
        self.apply(g.weighted_degree(v))
    }

    pub fn thresholds(&self, g: &WeightedGraph) -> Vec<Rational> {
        (0..g.node_count()).map(|v| self.threshold(g, v)).collect()
    }
}

impl Default for ThresholdConfig {
    fn default() -> Self {
        Self::half()
    }
}

/// `l(v)`: LCM of the denominators of `θ_v` and of every edge weight at `v`.
pub fn node_lcm(g: &WeightedGraph, v: NodeId, t: &ThresholdConfig) -> BigInt {
    let theta = t.threshold(g, v);
    arith::lcm_of_denominators(
        core::iter::once(&theta).chain(g.neighbors(v).iter().map(|(_, w)| w)),
    )
}

/// `L = max_v l(v)`, and 1 for a graph without nodes.
pub fn graph_lcm(g: &WeightedGraph, t: &ThresholdConfig) -> BigInt {
    (0..g.node_count())
        .map(|v| node_lcm(g, v, t))
        .max()
        .unwrap_or_else(BigInt::one)
}
