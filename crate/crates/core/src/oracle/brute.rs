use alloc::vec::Vec;

use super::verify::verify;
use crate::graph::WeightedGraph;
use crate::problem::{Problem, ProblemParams};
use crate::subset::NodeSubset;
use crate::Error;

pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// Minimum-cardinality feasible set by exhaustive enumeration.
///
/// Subsets are visited by increasing size and lexicographically within a
/// size, so the first hit is both optimal and deterministic. `Ok(None)` means
/// the instance is infeasible.
pub fn brute_force_min(
    problem: Problem,
    g: &WeightedGraph,
    params: &ProblemParams,
    limit: usize,
) -> Result<Option<NodeSubset>, Error> {
    let n = g.node_count();
    if n > limit {
        return Err(Error::SizeLimitExceeded { size: n, limit });
    }
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            let set = NodeSubset::from_nodes(n, combo.iter().copied());
            if verify(problem, g, &set, params)? {
                return Ok(Some(set));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `combo` to the next k-combination of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn path(n: usize) -> WeightedGraph {
        WeightedGraph::unit(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn solve(problem: Problem, g: &WeightedGraph) -> Option<Vec<usize>> {
        brute_force_min(problem, g, &ProblemParams::default(), DEFAULT_ORACLE_LIMIT)
            .unwrap()
            .map(|s| s.sorted())
    }

    #[test]
    fn combinations_in_order() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert!(!next_combination(&mut [], 3));
    }

    #[test]
    fn known_optima() {
        assert_eq!(solve(Problem::Tds, &path(4)), Some(vec![1, 2]));
        assert_eq!(solve(Problem::Wppids, &path(3)), Some(vec![1]));
        assert_eq!(solve(Problem::Wppicds, &path(2)), Some(vec![0]));
    }

    #[test]
    fn infeasible_and_limits() {
        let g = WeightedGraph::unit(3, [(0, 1)]).unwrap();
        assert_eq!(solve(Problem::Tds, &g), None);
        assert_eq!(
            brute_force_min(Problem::Tds, &path(6), &ProblemParams::default(), 5),
            Err(Error::SizeLimitExceeded { size: 6, limit: 5 })
        );
    }
}
