//! Worked examples for each operation, with expected values produced by the
//! from-scratch oracles rather than the incremental engine.

mod common;

use common::*;
use domgreedy_core::arith::{int, ratio};
use domgreedy_core::components::{covering_components, induced_components, is_connected_subset};
use domgreedy_core::oracle::{
    brute_force_min, gap_scan, lt_closure, ms_oracle, prefix_connected_order, verify, DEFAULT_ORACLE_LIMIT,
};
use domgreedy_core::threshold::{graph_lcm, node_lcm};
use domgreedy_core::{
    greedy_construct, ratio_report, theoretical_bound, DominationPotential, Error, NodeSubset, Potential, Problem,
    ProblemParams, ThresholdConfig, WeightedGraph,
};
use num_bigint::BigInt;

#[test]
fn greedy_trace_on_star_matches_reference() {
    let g = star(3);
    let f = DominationPotential::tds(&g);
    let (picks, gains) = naive_greedy(&f);
    assert_eq!(picks, vec![0, 1]);
    assert_eq!(gains, vec![int(3), int(1)]);
    let run = greedy_construct(&f);
    assert_eq!(run.picks, picks);
    assert_eq!(run.marginals, gains);
    assert!(run.feasible);

    let opt = brute_force_min(Problem::Tds, &g, &ProblemParams::default(), DEFAULT_ORACLE_LIMIT)
        .unwrap()
        .unwrap();
    assert_eq!(opt.len(), 2);
    let bound = theoretical_bound(Problem::Tds, &g, &ProblemParams::default()).unwrap();
    let report = ratio_report(Some(Problem::Tds), &run, Some(opt.len()), &bound).unwrap();
    assert_eq!(report.observed_ratio, Some(int(1)));
    assert_eq!(report.bound_satisfied(), Some(true));
    assert!((report.theoretical_ratio - 2.0986).abs() < 1e-4);
}

#[test]
fn wppids_greedy_on_p3_is_optimal() {
    let g = path(3);
    let h = DominationPotential::wppids(&g, &ThresholdConfig::half()).unwrap();
    let run = greedy_construct(&h);
    assert_eq!(naive_greedy(&h), (vec![1], vec![int(2)]));
    assert_eq!(run.picks, vec![1]);
    let opt = brute_force_min(Problem::Wppids, &g, &ProblemParams::default(), 20).unwrap().unwrap();
    assert_eq!(opt.sorted(), vec![1]);
}

#[test]
fn wppicds_greedy_on_p4() {
    let g = path(4);
    let f = DominationPotential::wppicds(&g, &ThresholdConfig::half()).unwrap();
    let run = greedy_construct(&f);
    assert_eq!(run.len(), 2);
    assert!(run.feasible);
    assert_eq!(run.solution(4), set(4, &[1, 2]));
    let opt = brute_force_min(Problem::Wppicds, &g, &ProblemParams::default(), 20).unwrap().unwrap();
    assert_eq!(opt.len(), 2);
}

#[test]
fn potentials_at_full_set() {
    for n in 2..=5 {
        for g in domgreedy_core::small_graphs::connected_graphs(n) {
            let full = NodeSubset::full(n);
            assert_eq!(DominationPotential::tds(&g).value(&full), int(n as i64));
            for m in 1..=3 {
                let f = DominationPotential::ft_total(&g, m).unwrap();
                assert_eq!(f.value(&full), int((m * n) as i64));
            }
            let h = DominationPotential::wppids(&g, &ThresholdConfig::half()).unwrap();
            let thetas: domgreedy_core::Rational = (0..n).map(|v| g.weighted_degree(v) * ratio(1, 2)).sum();
            assert_eq!(h.value(&full), thetas);
        }
    }
}

#[test]
fn k4_fault_tolerant_value() {
    let g = complete(4);
    let f = DominationPotential::ft_total(&g, 2).unwrap();
    // node 0 in A without neighbors in A: m - 1; others one neighbor each
    assert_eq!(f.value(&set(4, &[0])), int(1 + 3));
    assert!(verify(Problem::Mtds, &g, &set(4, &[0, 1]), &ProblemParams::with_m(2).unwrap()).unwrap());
}

#[test]
fn covering_components_of_spanning_dominators() {
    // every connected graph, every A that touches all edges of a BFS spanning tree → q(A) = 1
    for n in 2..=5 {
        for g in domgreedy_core::small_graphs::connected_graphs(n) {
            let tree = prefix_connected_order(&g, &NodeSubset::full(n)).unwrap();
            let parent: Vec<(usize, usize)> = tree
                .iter()
                .skip(1)
                .map(|&v| {
                    let pos = tree.iter().position(|&u| u == v).unwrap();
                    let p = tree[..pos].iter().copied().find(|&u| g.has_edge(u, v)).unwrap();
                    (p, v)
                })
                .collect();
            for a in all_subsets(n) {
                if parent.iter().all(|&(u, v)| a.contains(u) || a.contains(v)) {
                    assert_eq!(covering_components(&g, &a), 1);
                }
            }
        }
    }
    assert_eq!(covering_components(&path(4), &set(4, &[1])), 2);
    assert_eq!(covering_components(&path(5), &NodeSubset::new(5)), 5);
}

#[test]
fn component_conventions() {
    let g = path(4);
    assert_eq!(induced_components(&g, &NodeSubset::new(4)), 0);
    assert!(is_connected_subset(&g, &NodeSubset::new(4)));
    let c = DominationPotential::wppicds(&g, &ThresholdConfig::half()).unwrap();
    assert_eq!(c.value(&NodeSubset::new(4)), int(0));
}

#[test]
fn lcm_examples() {
    let g = WeightedGraph::from_edges(3, [(0, 1, ratio(1, 2)), (0, 2, ratio(1, 3))]).unwrap();
    let t = ThresholdConfig::half();
    assert_eq!(node_lcm(&g, 0, &t), BigInt::from(12));
    // tight: 1/ms(0) = 12 = l(0)
    assert_eq!(ms_oracle(&g, 0, &t).unwrap(), Some(ratio(1, 12)));
    assert_eq!(graph_lcm(&g, &t), BigInt::from(12));
    assert_eq!(graph_lcm(&path(3), &t), BigInt::from(2));
    let lone = WeightedGraph::unit(1, []).unwrap();
    assert_eq!(graph_lcm(&lone, &t), BigInt::from(1));
}

#[test]
fn gap_scan_examples() {
    for g in domgreedy_core::small_graphs::connected_graphs(5) {
        let tds = gap_scan(&DominationPotential::tds(&g), &g, false).unwrap();
        assert_eq!(tds.max_gap, int(0));
        let h = DominationPotential::wppids(&g, &ThresholdConfig::half()).unwrap();
        assert_eq!(gap_scan(&h, &g, false).unwrap().max_gap, int(0));
    }
    let p5 = path(5);
    let f = DominationPotential::wppicds(&p5, &ThresholdConfig::half()).unwrap();
    assert_eq!(f.lcm(), &BigInt::from(2));
    let res = gap_scan(&f, &p5, true).unwrap();
    assert!(res.max_gap <= ratio(1, 2));
    let c5 = cycle(5);
    let f = DominationPotential::wppicds(&c5, &ThresholdConfig::half()).unwrap();
    let res = gap_scan(&f, &c5, false).unwrap();
    assert_eq!(res.max_gap, int(1));
    let w = res.witness.unwrap();
    assert!(w.a.is_subset_of(&w.b) && !w.b.contains(w.x));
    assert_eq!(w.gap(&f, false), int(1));
}

#[test]
fn diffusion_examples() {
    let g = path(3);
    let t = ThresholdConfig::half();
    let d = lt_closure(&g, &set(3, &[1]), &t).unwrap();
    assert_eq!((d.activated.len(), d.rounds), (3, 1));
    let d = lt_closure(&g, &NodeSubset::full(3), &t).unwrap();
    assert_eq!((d.activated.len(), d.rounds), (3, 0));
}

#[test]
fn bound_preconditions() {
    let g = WeightedGraph::unit(2, []).unwrap();
    assert_eq!(
        theoretical_bound(Problem::Tds, &g, &ProblemParams::default()),
        Err(Error::EdgelessGraph)
    );
}
