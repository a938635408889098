//! Greedy solve of one instance, with optional brute-force comparison.

use std::time::Instant;

use domgreedy_core::oracle::{brute_force_min, verify};
use domgreedy_core::{
    greedy_construct, ratio_report, theoretical_bound, DominationPotential, Error, Potential, Problem, ProblemParams,
    WeightedGraph,
};

use crate::report::{rational, six_decimals, BoundDisplay, InstanceRecord, REPORT_SCHEMA};

pub const DEFAULT_CLI_ORACLE_LIMIT: usize = 16;

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub problem: Problem,
    pub params: ProblemParams,
    pub oracle: bool,
    pub oracle_limit: usize,
    pub timing: bool,
}

impl SolveConfig {
    pub fn new(problem: Problem, params: ProblemParams) -> Self {
        Self {
            problem,
            params,
            oracle: false,
            oracle_limit: DEFAULT_CLI_ORACLE_LIMIT,
            timing: true,
        }
    }
}

pub fn solve_instance(
    cfg: &SolveConfig,
    id: u64,
    source: String,
    g: &WeightedGraph,
    resamples: u64,
) -> Result<InstanceRecord, Error> {
    let start = Instant::now();
    let problem = cfg.problem;
    let params = &cfg.params;
    let potential = DominationPotential::new(g, problem, params)?;
    let run = greedy_construct(&potential);
    let n = g.node_count();
    let verified = verify(problem, g, &run.solution(n), params)?;

    let optimum = if cfg.oracle && n <= cfg.oracle_limit {
        brute_force_min(problem, g, params, cfg.oracle_limit)?
    } else {
        None
    };
    let optimal_size = optimum.as_ref().map(|s| s.len());

    let bound = match theoretical_bound(problem, g, params) {
        Ok(b) => Some(b),
        Err(Error::EdgelessGraph) => None,
        Err(e) => return Err(e),
    };
    let report = match (&bound, run.feasible) {
        (Some(b), true) => Some(ratio_report(Some(problem), &run, optimal_size, b)?),
        _ => None,
    };
    let wall_time_us = cfg.timing.then(|| start.elapsed().as_micros() as u64);

    let weighted = problem.is_weighted();
    Ok(InstanceRecord {
        schema: REPORT_SCHEMA,
        id,
        source,
        problem: problem.name(),
        m: (problem == Problem::Mtds).then_some(params.m),
        fraction: weighted.then(|| rational(params.threshold.fraction())),
        ceiling: weighted.then_some(params.threshold.ceiling()),
        n,
        edges: g.edge_count(),
        max_degree: g.max_degree(),
        max_weighted_degree: rational(&g.max_weighted_degree()),
        lcm: weighted.then(|| potential.lcm().to_string()),
        target: rational(potential.target()),
        final_value: rational(&run.final_value),
        feasible: run.feasible,
        verified,
        greedy_size: run.len(),
        picks: run.picks.clone(),
        delta_max: run.delta_max().map(rational),
        delta_min: run.delta_min().map(rational),
        optimal_size,
        bound: bound.as_ref().map(|b| BoundDisplay(b).to_string()),
        theoretical_ratio: bound.as_ref().map(|b| six_decimals(b.approx())),
        observed_ratio: report.as_ref().and_then(|r| r.observed_ratio.as_ref().map(rational)),
        bound_satisfied: report.and_then(|r| r.bound_satisfied()),
        resamples,
        wall_time_us,
    })
}
