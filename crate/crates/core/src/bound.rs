//! Logarithmic approximation ratios and their certified comparison.
//!
//! A ratio is kept symbolically as `additive + ln(log_argument)` with an exact
//! rational argument. Floating point is only used to evaluate the logarithm,
//! and every comparison goes through an outward-rounded enclosure so that a
//! verdict of [`BoundVerdict::Satisfied`] or [`BoundVerdict::Violated`] is
//! never an artefact of rounding.

use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::graph::WeightedGraph;
use crate::problem::{Problem, ProblemParams};
use crate::threshold::graph_lcm;
use crate::Error;

/// `additive + ln(log_argument)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundExpr {
    pub additive: u32,
    pub log_argument: Rational,
}

impl BoundExpr {
    pub fn new(additive: u32, log_argument: Rational) -> Self {
        assert!(log_argument > Rational::zero(), "logarithm of a non-positive value");
        Self {
            additive,
            log_argument,
        }
    }

    /// Nearest floating-point value, for display.
    pub fn approx(&self) -> f64 {
        self.additive as f64 + libm::log(arith::to_f64(&self.log_argument))
    }

    /// Interval `[lo, hi]` guaranteed to contain the exact value.
    pub fn enclosure(&self) -> (f64, f64) {
        let x = arith::to_f64(&self.log_argument);
        let (x_lo, x_hi) = (steps_down(x, 2), steps_up(x, 2));
        let ln_lo = steps_down(libm::log(x_lo), 2);
        let ln_hi = steps_up(libm::log(x_hi), 2);
        let c = self.additive as f64;
        (steps_down(c + ln_lo, 1), steps_up(c + ln_hi, 1))
    }

    /// Compares `greedy` against `self · optimal + 1`.
    pub fn certify(&self, greedy: usize, optimal: usize) -> BoundVerdict {
        if optimal == 0 {
            // Only the empty set can be optimal; greedy returns it too.
            return if greedy == 0 {
                BoundVerdict::Satisfied
            } else {
                BoundVerdict::Violated
            };
        }
        // greedy < B·opt + 1  <=>  (greedy - 1) / opt < B
        let lhs = arith::ratio(greedy as i64 - 1, optimal as i64);
        if self.log_argument.is_one() {
            // ln 1 = 0 exactly; any other rational argument has an irrational logarithm.
            return if lhs < arith::int(self.additive as i64) {
                BoundVerdict::Satisfied
            } else {
                BoundVerdict::Violated
            };
        }
        let (lo, hi) = self.enclosure();
        let lo = arith::from_f64(lo).expect("finite bound");
        let hi = arith::from_f64(hi).expect("finite bound");
        if lhs < lo {
            BoundVerdict::Satisfied
        } else if lhs >= hi {
            BoundVerdict::Violated
        } else {
            BoundVerdict::Indeterminate
        }
    }
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+ln({})", self.additive, self.log_argument)
    }
}

fn steps_down(mut x: f64, k: usize) -> f64 {
    for _ in 0..k {
        x = x.next_down();
    }
    x
}

fn steps_up(mut x: f64, k: usize) -> f64 {
    for _ in 0..k {
        x = x.next_up();
    }
    x
}

/// Approximation ratio proven for the greedy constructor on `problem`.
///
/// | problem | ratio |
/// |---------|-------|
/// | TDS     | `1 + ln Δ` |
/// | m-TDS   | `1 + ln(Δ + m - 1)` |
/// | WPPIDS  | `1 + ln(L·(W + θ(W)))` |
/// | WPPITDS | `1 + ln(L·(W + θ(W)) + Δ)` |
/// | WPPICDS | `2 + ln(L·(W + θ(W)) + Δ)` |
///
/// where `θ(W)` is the threshold rule applied to the largest weighted degree:
/// `W/2` by default (so `L·(W + θ(W)) = (3/2)·L·W`), `p·W` for a general
/// fraction and `⌈p·W⌉` in ceiling mode.
pub fn theoretical_bound(
    problem: Problem,
    g: &WeightedGraph,
    params: &ProblemParams,
) -> Result<BoundExpr, Error> {
    let max_degree = g.max_degree();
    if max_degree == 0 {
        return Err(Error::EdgelessGraph);
    }
    let delta = arith::int(max_degree as i64);
    let influence = || -> Result<Rational, Error> {
        params.threshold.check(g)?;
        let w = g.max_weighted_degree();
        let lcm = Rational::from_integer(graph_lcm(g, &params.threshold));
        Ok(lcm * (params.threshold.apply(&w) + w))
    };
    Ok(match problem {
        Problem::Tds => BoundExpr::new(1, delta),
        Problem::Mtds => {
            if params.m == 0 {
                return Err(Error::InvalidFaultTolerance);
            }
            BoundExpr::new(1, delta + arith::int(params.m as i64) - Rational::one())
        }
        Problem::Wppids => BoundExpr::new(1, influence()?),
        Problem::Wppitds => BoundExpr::new(1, influence()? + delta),
        Problem::Wppicds => BoundExpr::new(2, influence()? + delta),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVerdict {
    Satisfied,
    Violated,
    /// The enclosure straddles the comparison point.
    Indeterminate,
}

/// Theoretical ratio against an observed greedy run.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub problem: Option<Problem>,
    pub bound: BoundExpr,
    pub theoretical_ratio: f64,
    pub greedy_size: usize,
    pub optimal_size: Option<usize>,
    /// `greedy_size / optimal_size`.
    pub observed_ratio: Option<Rational>,
    pub verdict: Option<BoundVerdict>,
}

impl BoundReport {
    /// `None` when no optimum was supplied.
    pub fn bound_satisfied(&self) -> Option<bool> {
        self.verdict.map(|v| v == BoundVerdict::Satisfied)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use crate::threshold::ThresholdConfig;

    fn star(leaves: usize) -> WeightedGraph {
        WeightedGraph::unit(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn tds_bound_on_degree_three() {
        let b = theoretical_bound(Problem::Tds, &star(3), &ProblemParams::default()).unwrap();
        assert_eq!(b, BoundExpr::new(1, int(3)));
        assert!((b.approx() - 2.0986).abs() < 1e-4);
    }

    #[test]
    fn mtds_bound() {
        let b = theoretical_bound(Problem::Mtds, &star(3), &ProblemParams::with_m(2).unwrap()).unwrap();
        assert_eq!(b.log_argument, int(4));
        assert!((b.approx() - 2.3863).abs() < 1e-4);
    }

    #[test]
    fn wppicds_ceiling_bound_on_degree_three() {
        // unit weights, ceiling: L = 1, W = Δ = 3, argument ⌈3/2⌉ + 3 + 3 = 8
        let ceil = ThresholdConfig::new(ratio(1, 2), true).unwrap();
        let params = ProblemParams::new(1, ceil).unwrap();
        let b = theoretical_bound(Problem::Wppicds, &star(3), &params).unwrap();
        assert_eq!(b, BoundExpr::new(2, int(8)));
        assert!(b.approx() >= 2.0 + libm::log(7.5));
        assert!((b.approx() - 4.0794).abs() < 1e-4);
    }

    #[test]
    fn wppids_default_is_three_halves_lw() {
        // star K_{1,3}: W = 3, L = 2 (θ_center = 3/2)
        let b = theoretical_bound(Problem::Wppids, &star(3), &ProblemParams::default()).unwrap();
        assert_eq!(b.log_argument, ratio(3, 2) * int(2) * int(3));
        let b = theoretical_bound(Problem::Wppitds, &star(3), &ProblemParams::default()).unwrap();
        assert_eq!(b.log_argument, int(9 + 3));
    }

    #[test]
    fn percentage_fraction() {
        // p = 1/3 on P3: W = 2, θ(2) = 2/3, θ_leaf = 1/3 → L = 3
        let g = WeightedGraph::unit(3, [(0, 1), (1, 2)]).unwrap();
        let t = ThresholdConfig::new(ratio(1, 3), false).unwrap();
        let b = theoretical_bound(Problem::Wppids, &g, &ProblemParams::new(1, t).unwrap()).unwrap();
        assert_eq!(b.log_argument, int(3) * (int(1) + ratio(1, 3)) * int(2));
    }

    #[test]
    fn edgeless_graph_has_no_bound() {
        let g = WeightedGraph::unit(3, []).unwrap();
        assert_eq!(
            theoretical_bound(Problem::Tds, &g, &ProblemParams::default()),
            Err(Error::EdgelessGraph)
        );
    }

    #[test]
    fn enclosure_contains_value() {
        for arg in [1, 2, 3, 7, 1000] {
            let b = BoundExpr::new(1, int(arg));
            let (lo, hi) = b.enclosure();
            assert!(lo < b.approx() && b.approx() < hi);
            assert!(hi - lo < 1e-12);
        }
    }

    #[test]
    fn certification() {
        let b = BoundExpr::new(1, int(3));
        assert_eq!(b.certify(2, 2), BoundVerdict::Satisfied);
        assert_eq!(b.certify(1, 1), BoundVerdict::Satisfied);
        let one = BoundExpr::new(1, int(1));
        assert_eq!(one.certify(5, 2), BoundVerdict::Violated);
        // exactly on the boundary: 3 < 1·2 + 1 is false
        assert_eq!(one.certify(3, 2), BoundVerdict::Violated);
        assert_eq!(one.certify(2, 2), BoundVerdict::Satisfied);
    }
}
