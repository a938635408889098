//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! 3          node count
//! 0 1        unit weight
//! 1 2 1/3    rational weight
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use domgreedy_core::{Error as GraphError, NodeId, Rational, WeightedGraph};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalError {
    #[error("decimal literal `{0}` is not allowed; write it as p/q")]
    Decimal(String),
    #[error("`{0}` is not an integer or p/q literal")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses an integer or `p/q` literal exactly.
pub fn parse_rational(text: &str) -> Result<Rational, RationalError> {
    let text = text.trim();
    if text.contains(['.', 'e', 'E']) {
        return Err(RationalError::Decimal(text.to_owned()));
    }
    let int = |s: &str| BigInt::from_str(s).map_err(|_| RationalError::Malformed(text.to_owned()));
    match text.split_once('/') {
        None => Ok(Rational::from_integer(int(text)?)),
        Some((p, q)) => {
            let (p, q) = (int(p)?, int(q)?);
            if q.is_zero() {
                return Err(RationalError::ZeroDenominator(text.to_owned()));
            }
            Ok(Rational::new(p, q))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("no node count line found")]
    MissingNodeCount,
    #[error("line {line}: invalid node count `{text}`")]
    NodeCount { line: usize, text: String },
    #[error("line {line}: expected `u v [w]`, found `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {source}")]
    Weight { line: usize, source: RationalError },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

/// Parses the edge-list format into a graph.
pub fn parse_graph(text: &str) -> Result<WeightedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(ParseError::MissingNodeCount)?;
    let n: usize = header.parse().map_err(|_| ParseError::NodeCount {
        line,
        text: header.to_owned(),
    })?;

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (line, content) in lines {
        let malformed = || ParseError::Malformed {
            line,
            text: content.to_owned(),
        };
        let fields: Vec<&str> = content.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(malformed());
        }
        let u: NodeId = fields[0].parse().map_err(|_| malformed())?;
        let v: NodeId = fields[1].parse().map_err(|_| malformed())?;
        let w = match fields.get(2) {
            Some(w) => parse_rational(w).map_err(|source| ParseError::Weight { line, source })?,
            None => Rational::one(),
        };
        let graph_err = |source| ParseError::Graph { line, source };
        if let Some(&node) = [u, v].iter().find(|&&x| x >= n) {
            return Err(graph_err(GraphError::NodeOutOfRange { node, node_count: n }));
        }
        if u == v {
            return Err(graph_err(GraphError::SelfLoop { node: u }));
        }
        let (a, b) = (u.min(v), u.max(v));
        if !w.is_positive() {
            return Err(graph_err(GraphError::NonPositiveWeight { u: a, v: b }));
        }
        if !seen.insert((a, b)) {
            return Err(graph_err(GraphError::DuplicateEdge { u: a, v: b }));
        }
        edges.push((u, v, w));
    }
    // every edge was validated above
    Ok(WeightedGraph::from_edges(n, edges).expect("validated edge list"))
}

/// Serializes a graph; unit weights are written explicitly.
pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = format!("{}\n", g.node_count());
    for (u, v, w) in g.edges() {
        writeln!(out, "{u} {v} {w}").unwrap();
    }
    out
}
