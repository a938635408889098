use crate::components::is_connected_subset;
use crate::graph::WeightedGraph;
use crate::problem::{Problem, ProblemParams};
use crate::subset::NodeSubset;
use crate::Error;

/// Checks the problem definition for `set` directly from the adjacency.
///
/// * TDS: every node has a neighbor in `set`.
/// * m-TDS: every outside node has at least `m` neighbors in `set`, every
///   member at least one.
/// * WPPIDS: every outside node `v` has `W_S(v) >= θ_v`.
/// * WPPITDS: WPPIDS and every node has a neighbor in `set`.
/// * WPPICDS: WPPIDS and `set` induces a connected subgraph.
pub fn verify(
    problem: Problem,
    g: &WeightedGraph,
    set: &NodeSubset,
    params: &ProblemParams,
) -> Result<bool, Error> {
    let n = g.node_count();
    let total = || (0..n).all(|v| g.neighbors_in(v, set) >= 1);
    let influence = || -> Result<bool, Error> {
        params.threshold.check(g)?;
        Ok((0..n)
            .filter(|&v| !set.contains(v))
            .all(|v| g.weight_toward(v, set) >= params.threshold.threshold(g, v)))
    };
    Ok(match problem {
        Problem::Tds => total(),
        Problem::Mtds => {
            if params.m == 0 {
                return Err(Error::InvalidFaultTolerance);
            }
            (0..n).all(|v| {
                let need = if set.contains(v) { 1 } else { params.m };
                g.neighbors_in(v, set) >= need
            })
        }
        Problem::Wppids => influence()?,
        Problem::Wppitds => influence()? && total(),
        Problem::Wppicds => influence()? && is_connected_subset(g, set),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threshold::ThresholdConfig;

    fn path(n: usize) -> WeightedGraph {
        WeightedGraph::unit(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn check(problem: Problem, g: &WeightedGraph, nodes: &[usize], m: usize) -> bool {
        let set = NodeSubset::from_nodes(g.node_count(), nodes.iter().copied());
        verify(problem, g, &set, &ProblemParams::with_m(m).unwrap()).unwrap()
    }

    #[test]
    fn total_domination() {
        let g = path(4);
        assert!(check(Problem::Tds, &g, &[1, 2], 1));
        assert!(!check(Problem::Tds, &g, &[1], 1));
    }

    #[test]
    fn fault_tolerant_on_k4() {
        let g = WeightedGraph::unit(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(check(Problem::Mtds, &g, &[0, 1], 2));
        assert!(!check(Problem::Mtds, &g, &[0], 2));
        assert!(!check(Problem::Mtds, &g, &[0, 1], 3));
    }

    #[test]
    fn partial_influence_on_p3() {
        let g = path(3);
        assert!(!check(Problem::Wppids, &g, &[0], 1));
        assert!(check(Problem::Wppids, &g, &[1], 1));
        assert!(!check(Problem::Wppitds, &g, &[1], 1));
        assert!(check(Problem::Wppitds, &g, &[0, 1], 1));
        assert!(check(Problem::Wppicds, &g, &[1], 1));
        assert!(!check(Problem::Wppicds, &g, &[0, 2], 1));
    }

    #[test]
    fn isolated_node_conventions() {
        let g = WeightedGraph::unit(3, [(0, 1)]).unwrap();
        assert!(check(Problem::Wppids, &g, &[0], 1));
        assert!(!check(Problem::Tds, &g, &[0, 1, 2], 1));
        assert!(!check(Problem::Wppitds, &g, &[0, 1, 2], 1));
    }

    #[test]
    fn ceiling_on_weighted_graph_is_an_error() {
        let g = WeightedGraph::from_edges(2, [(0, 1, crate::arith::ratio(1, 2))]).unwrap();
        let params = ProblemParams::new(1, ThresholdConfig::new(crate::arith::ratio(1, 2), true).unwrap()).unwrap();
        assert_eq!(
            verify(Problem::Wppids, &g, &NodeSubset::new(2), &params),
            Err(Error::CeilingRequiresUnitWeights)
        );
    }
}
