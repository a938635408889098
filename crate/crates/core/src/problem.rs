use core::fmt;
use core::str::FromStr;

use crate::threshold::ThresholdConfig;
use crate::Error;

/// The five domination problems handled by the solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    /// Total domination: every node has a neighbor in `S`.
    Tds,
    /// Fault-tolerant total domination: outside nodes have `m` neighbors in
    /// `S`, inside nodes at least one.
    Mtds,
    /// Weighted partial positive influence domination.
    Wppids,
    /// WPPIDS that is also total.
    Wppitds,
    /// WPPIDS that is also connected.
    Wppicds,
}

impl Problem {
    pub const ALL: [Problem; 5] = [
        Problem::Tds,
        Problem::Mtds,
        Problem::Wppids,
        Problem::Wppitds,
        Problem::Wppicds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Tds => "tds",
            Problem::Mtds => "mtds",
            Problem::Wppids => "wppids",
            Problem::Wppitds => "wppitds",
            Problem::Wppicds => "wppicds",
        }
    }

    /// Whether the problem depends on edge weights and thresholds.
    pub fn is_weighted(self) -> bool {
        matches!(self, Problem::Wppids | Problem::Wppitds | Problem::Wppicds)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownProblem;

impl fmt::Display for UnknownProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of tds, mtds, wppids, wppitds, wppicds")
    }
}

impl core::error::Error for UnknownProblem {}

impl FromStr for Problem {
    type Err = UnknownProblem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Problem::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or(UnknownProblem)
    }
}

/// Parameters shared by every problem: fault tolerance `m` (m-TDS only) and
/// the threshold rule (weighted variants only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemParams {
    pub m: usize,
    pub threshold: ThresholdConfig,
}

impl ProblemParams {
    pub fn new(m: usize, threshold: ThresholdConfig) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::InvalidFaultTolerance);
        }
        Ok(Self { m, threshold })
    }

    pub fn with_m(m: usize) -> Result<Self, Error> {
        Self::new(m, ThresholdConfig::half())
    }
}

impl Default for ProblemParams {
    fn default() -> Self {
        Self {
            m: 1,
            threshold: ThresholdConfig::half(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in Problem::ALL {
            assert_eq!(p.name().parse::<Problem>(), Ok(p));
        }
        assert!("cds".parse::<Problem>().is_err());
    }

    #[test]
    fn m_must_be_positive() {
        assert_eq!(ProblemParams::with_m(0), Err(Error::InvalidFaultTolerance));
    }
}
