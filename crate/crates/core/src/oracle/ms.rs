use alloc::vec::Vec;

use num_traits::Zero;

use crate::arith::Rational;
use crate::graph::{NodeId, WeightedGraph};
use crate::threshold::ThresholdConfig;
use crate::Error;

pub const MS_DEGREE_LIMIT: usize = 20;

/// `ms(v)`: smallest positive shortfall `θ_v - W_A(v)` over all sets `A`.
///
/// Only `A ∩ N(v)` matters, so the enumeration runs over neighbor subsets.
/// The empty set always contributes `θ_v`; `None` means no shortfall is
/// positive, which happens exactly when `θ_v = 0` (isolated nodes).
pub fn ms_oracle(g: &WeightedGraph, v: NodeId, t: &ThresholdConfig) -> Result<Option<Rational>, Error> {
    let degree = g.degree(v);
    if degree > MS_DEGREE_LIMIT {
        return Err(Error::DegreeLimitExceeded {
            node: v,
            degree,
            limit: MS_DEGREE_LIMIT,
        });
    }
    t.check(g)?;
    let theta = t.threshold(g, v);
    let weights: Vec<&Rational> = g.neighbors(v).iter().map(|(_, w)| w).collect();
    let mut best: Option<Rational> = None;
    for mask in 0u32..1 << degree {
        let inside: Rational = weights
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, w)| *w)
            .sum();
        let shortfall = &theta - inside;
        if shortfall > Rational::zero() && best.as_ref().is_none_or(|b| shortfall < *b) {
            best = Some(shortfall);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};

    #[test]
    fn unit_leaf() {
        let g = WeightedGraph::unit(2, [(0, 1)]).unwrap();
        assert_eq!(ms_oracle(&g, 0, &ThresholdConfig::half()).unwrap(), Some(ratio(1, 2)));
    }

    #[test]
    fn unit_degree_two() {
        let g = WeightedGraph::unit(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(ms_oracle(&g, 0, &ThresholdConfig::half()).unwrap(), Some(int(1)));
    }

    #[test]
    fn tight_fractional_case() {
        let g = WeightedGraph::from_edges(3, [(0, 1, ratio(1, 2)), (0, 2, ratio(1, 3))]).unwrap();
        assert_eq!(ms_oracle(&g, 0, &ThresholdConfig::half()).unwrap(), Some(ratio(1, 12)));
    }

    #[test]
    fn isolated_node_has_no_shortfall() {
        let g = WeightedGraph::unit(1, []).unwrap();
        assert_eq!(ms_oracle(&g, 0, &ThresholdConfig::half()).unwrap(), None);
    }

    #[test]
    fn degree_limit() {
        let n = MS_DEGREE_LIMIT + 2;
        let g = WeightedGraph::unit(n, (1..n).map(|i| (0, i))).unwrap();
        assert!(matches!(
            ms_oracle(&g, 0, &ThresholdConfig::half()),
            Err(Error::DegreeLimitExceeded { node: 0, .. })
        ));
    }
}
