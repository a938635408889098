//! Versioned report records and their JSON-lines / CSV encodings.

use std::fmt;
use std::io::{self, Write};

use domgreedy_core::{BoundExpr, Rational};
use serde::Serialize;

pub const REPORT_SCHEMA: &str = "domgreedy.report/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Process exit status, ordered by severity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Outcome {
    Pass,
    Infeasible,
    /// A shipped guarantee failed; always a bug.
    Violation,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Infeasible => 2,
            Outcome::Violation => 3,
        }
    }
}

/// One solved instance.
///
/// Rationals are written as `p/q` strings. Optional fields serialize as `null`
/// so every line has the same keys; `wall_time_us` is the one exception and is
/// omitted when timing is disabled.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceRecord {
    pub schema: &'static str,
    pub id: u64,
    pub source: String,
    pub problem: &'static str,
    pub m: Option<usize>,
    pub fraction: Option<String>,
    pub ceiling: Option<bool>,
    pub n: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub max_weighted_degree: String,
    pub lcm: Option<String>,
    pub target: String,
    pub final_value: String,
    pub feasible: bool,
    /// Independent definition-level check of the greedy solution.
    pub verified: bool,
    pub greedy_size: usize,
    pub picks: Vec<usize>,
    pub delta_max: Option<String>,
    pub delta_min: Option<String>,
    pub optimal_size: Option<usize>,
    pub bound: Option<String>,
    pub theoretical_ratio: Option<String>,
    pub observed_ratio: Option<String>,
    pub bound_satisfied: Option<bool>,
    pub resamples: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_us: Option<u64>,
}

impl InstanceRecord {
    pub fn outcome(&self) -> Outcome {
        let oracle_disagrees = self.optimal_size.is_some() && !self.feasible;
        if self.bound_satisfied == Some(false) || self.feasible != self.verified || oracle_disagrees {
            Outcome::Violation
        } else if !self.feasible {
            Outcome::Infeasible
        } else {
            Outcome::Pass
        }
    }
}

/// `additive+ln(argument)` with the argument as an exact rational.
pub struct BoundDisplay<'a>(pub &'a BoundExpr);

impl fmt::Display for BoundDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+ln({})", self.0.additive, self.0.log_argument)
    }
}

/// Bound values are printed with six decimals.
pub fn six_decimals(x: f64) -> String {
    format!("{x:.6}")
}

pub fn rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Serialize)]
struct CsvRow<'a> {
    id: u64,
    source: &'a str,
    problem: &'a str,
    m: Option<usize>,
    n: usize,
    edges: usize,
    max_degree: usize,
    max_weighted_degree: &'a str,
    lcm: Option<&'a str>,
    feasible: bool,
    verified: bool,
    greedy_size: usize,
    picks: String,
    delta_max: Option<&'a str>,
    delta_min: Option<&'a str>,
    optimal_size: Option<usize>,
    theoretical_ratio: Option<&'a str>,
    observed_ratio: Option<&'a str>,
    bound_satisfied: Option<bool>,
    resamples: u64,
    wall_time_us: Option<u64>,
}

impl<'a> From<&'a InstanceRecord> for CsvRow<'a> {
    fn from(r: &'a InstanceRecord) -> Self {
        CsvRow {
            id: r.id,
            source: &r.source,
            problem: r.problem,
            m: r.m,
            n: r.n,
            edges: r.edges,
            max_degree: r.max_degree,
            max_weighted_degree: &r.max_weighted_degree,
            lcm: r.lcm.as_deref(),
            feasible: r.feasible,
            verified: r.verified,
            greedy_size: r.greedy_size,
            picks: r.picks.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
            delta_max: r.delta_max.as_deref(),
            delta_min: r.delta_min.as_deref(),
            optimal_size: r.optimal_size,
            theoretical_ratio: r.theoretical_ratio.as_deref(),
            observed_ratio: r.observed_ratio.as_deref(),
            bound_satisfied: r.bound_satisfied,
            resamples: r.resamples,
            wall_time_us: r.wall_time_us,
        }
    }
}

/// Writes any serializable records as JSON lines.
pub fn write_json_lines<T: Serialize, W: Write>(records: &[T], mut out: W) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn write_records<W: Write>(records: &[InstanceRecord], format: OutputFormat, out: W) -> io::Result<()> {
    match format {
        OutputFormat::Json => write_json_lines(records, out),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(CsvRow::from(r)).map_err(io::Error::other)?;
            }
            w.flush()
        }
    }
}

/// Aggregate over a batch of records.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Summary {
    pub instances: usize,
    pub feasible: usize,
    pub oracle_runs: usize,
    pub bound_satisfied: usize,
    pub violations: usize,
    pub resamples: u64,
    pub max_observed_ratio: Option<Rational>,
}

impl Summary {
    pub fn of(records: &[InstanceRecord]) -> Self {
        let mut s = Summary::default();
        for r in records {
            s.instances += 1;
            s.feasible += usize::from(r.feasible);
            s.oracle_runs += usize::from(r.optimal_size.is_some());
            s.bound_satisfied += usize::from(r.bound_satisfied == Some(true));
            s.violations += usize::from(r.outcome() == Outcome::Violation);
            s.resamples += r.resamples;
            if let (Some(g), Some(o)) = (r.feasible.then_some(r.greedy_size), r.optimal_size.filter(|&o| o > 0)) {
                let ratio = Rational::new(g.into(), o.into());
                if s.max_observed_ratio.as_ref().is_none_or(|m| ratio > *m) {
                    s.max_observed_ratio = Some(ratio);
                }
            }
        }
        s
    }

    pub fn outcome(records: &[InstanceRecord]) -> Outcome {
        records.iter().map(InstanceRecord::outcome).max().unwrap_or(Outcome::Pass)
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "instances={} feasible={} oracle_runs={} bound_satisfied={} violations={} resamples={}",
            self.instances, self.feasible, self.oracle_runs, self.bound_satisfied, self.violations, self.resamples
        )?;
        if let Some(r) = &self.max_observed_ratio {
            write!(f, " max_observed_ratio={r}")?;
        }
        Ok(())
    }
}
