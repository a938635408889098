//! Seeded random instance generation.

use std::fmt;
use std::str::FromStr;

use domgreedy_core::{Rational, WeightedGraph};
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::parse_rational;

/// Resampling budget for connected instances.
pub const MAX_RESAMPLES: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("edge probability must be a rational in [0, 1] with a 64-bit denominator")]
    Probability,
    #[error("unknown weight model `{0}`; expected `unit` or `rand:D` with D >= 1")]
    WeightModel(String),
    #[error("unknown generator `{0}`; only `gnp` is available")]
    Model(String),
    #[error("no connected graph found after {0} samples")]
    ResampleBudget(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightModel {
    Unit,
    /// Weights `p/q` with `p, q` uniform in `1..=max_denominator`.
    Random { max_denominator: u32 },
}

impl FromStr for WeightModel {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenError::WeightModel(s.to_owned());
        match s {
            "unit" => Ok(WeightModel::Unit),
            _ => {
                let d: u32 = s.strip_prefix("rand:").ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Ok(WeightModel::Random { max_denominator: d })
            }
        }
    }
}

impl fmt::Display for WeightModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightModel::Unit => f.write_str("unit"),
            WeightModel::Random { max_denominator } => write!(f, "rand:{max_denominator}"),
        }
    }
}

/// Erdős–Rényi `G(n, p)` with an exact rational edge probability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GnpSpec {
    pub n: usize,
    p_num: u64,
    p_den: u64,
    pub weights: WeightModel,
    /// Resample until the graph is connected.
    pub connected: bool,
}

impl GnpSpec {
    pub fn new(n: usize, p: &Rational, weights: WeightModel, connected: bool) -> Result<Self, GenError> {
        if p.is_negative() || *p > Rational::one() {
            return Err(GenError::Probability);
        }
        let p_num = p.numer().to_u64().ok_or(GenError::Probability)?;
        let p_den = p.denom().to_u64().ok_or(GenError::Probability)?;
        Ok(Self {
            n,
            p_num,
            p_den,
            weights,
            connected,
        })
    }

    /// Parses the model name and probability literal as given on the command line.
    pub fn parse(model: &str, n: usize, p: &str, weights: WeightModel, connected: bool) -> Result<Self, GenError> {
        if model != "gnp" {
            return Err(GenError::Model(model.to_owned()));
        }
        let p = parse_rational(p).map_err(|_| GenError::Probability)?;
        Self::new(n, &p, weights, connected)
    }

    pub fn probability(&self) -> Rational {
        Rational::new(self.p_num.into(), self.p_den.into())
    }

    pub fn describe(&self) -> String {
        format!(
            "gnp(n={},p={},weights={}{})",
            self.n,
            self.probability(),
            self.weights,
            if self.connected { ",connected" } else { "" }
        )
    }
}

/// A generated graph with the number of rejected samples before it.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: WeightedGraph,
    pub resamples: u64,
}

/// RNG for instance `id` of a run seeded with `seed`; streams are independent.
pub fn instance_rng(seed: u64, id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(id);
    rng
}

pub fn sample_gnp<R: Rng>(spec: &GnpSpec, rng: &mut R) -> Result<Generated, GenError> {
    for resamples in 0..MAX_RESAMPLES {
        let graph = sample_once(spec, rng);
        if !spec.connected || graph.is_connected() {
            return Ok(Generated { graph, resamples });
        }
    }
    Err(GenError::ResampleBudget(MAX_RESAMPLES))
}

fn sample_once<R: Rng>(spec: &GnpSpec, rng: &mut R) -> WeightedGraph {
    let n = spec.n;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if spec.p_num > 0 && rng.gen_range(0..spec.p_den) < spec.p_num {
                edges.push((u, v, sample_weight(spec.weights, rng)));
            }
        }
    }
    WeightedGraph::from_edges(n, edges).expect("generated edges are simple and positive")
}

/// Same topology with every weight drawn from `model`.
pub fn reweight<R: Rng>(g: &WeightedGraph, model: WeightModel, rng: &mut R) -> WeightedGraph {
    let edges: Vec<_> = g.edges().map(|(u, v, _)| (u, v, sample_weight(model, rng))).collect();
    WeightedGraph::from_edges(g.node_count(), edges).expect("same edge set")
}

fn sample_weight<R: Rng>(model: WeightModel, rng: &mut R) -> Rational {
    match model {
        WeightModel::Unit => Rational::one(),
        WeightModel::Random { max_denominator: d } => Rational::new(rng.gen_range(1..=d).into(), rng.gen_range(1..=d).into()),
    }
}

/// Instance `id` of a seeded run.
pub fn generate(spec: &GnpSpec, seed: u64, id: u64) -> Result<Generated, GenError> {
    sample_gnp(spec, &mut instance_rng(seed, id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use domgreedy_core::arith::ratio;

    fn spec(n: usize, p: Rational, weights: WeightModel, connected: bool) -> GnpSpec {
        GnpSpec::new(n, &p, weights, connected).unwrap()
    }

    #[test]
    fn weight_models() {
        assert_eq!("unit".parse(), Ok(WeightModel::Unit));
        assert_eq!("rand:6".parse(), Ok(WeightModel::Random { max_denominator: 6 }));
        assert!("rand:0".parse::<WeightModel>().is_err());
        assert!("rand".parse::<WeightModel>().is_err());
        assert_eq!(WeightModel::Random { max_denominator: 4 }.to_string(), "rand:4");
    }

    #[test]
    fn probability_bounds() {
        assert!(GnpSpec::new(3, &ratio(3, 2), WeightModel::Unit, false).is_err());
        assert!(GnpSpec::new(3, &ratio(-1, 2), WeightModel::Unit, false).is_err());
        assert!(GnpSpec::parse("ws", 3, "1/2", WeightModel::Unit, false).is_err());
        assert!(GnpSpec::parse("gnp", 3, "0.5", WeightModel::Unit, false).is_err());
    }

    #[test]
    fn extreme_probabilities() {
        let empty = generate(&spec(6, ratio(0, 1), WeightModel::Unit, false), 1, 0).unwrap();
        assert_eq!(empty.graph.edge_count(), 0);
        let full = generate(&spec(6, ratio(1, 1), WeightModel::Unit, false), 1, 0).unwrap();
        assert_eq!(full.graph.edge_count(), 15);
    }

    #[test]
    fn deterministic_per_id() {
        let s = spec(9, ratio(2, 5), WeightModel::Random { max_denominator: 6 }, false);
        let a = generate(&s, 42, 3).unwrap().graph;
        assert_eq!(a, generate(&s, 42, 3).unwrap().graph);
        let others = (0..8).filter(|&i| generate(&s, 42, i).unwrap().graph != a).count();
        assert!(others >= 6);
    }

    #[test]
    fn connected_rejection_sampling() {
        let s = spec(10, ratio(1, 5), WeightModel::Unit, true);
        let total: u64 = (0..20)
            .map(|i| {
                let g = generate(&s, 7, i).unwrap();
                assert!(g.graph.is_connected());
                g.resamples
            })
            .sum();
        assert!(total > 0, "sparse graphs should need resampling");
    }

    #[test]
    fn random_weights_respect_denominator() {
        let s = spec(8, ratio(1, 1), WeightModel::Random { max_denominator: 4 }, false);
        let g = generate(&s, 5, 0).unwrap().graph;
        for (_, _, w) in g.edges() {
            assert!(*w.denom() <= 4.into() && *w.numer() <= 4.into());
        }
    }
}
