//! Local structure entropy.
//!
//! For a node `i`, take its ego network (the node plus its neighbors), turn
//! the members' degrees into a distribution `p_j = degree(j) / sum(degree)`,
//! and return the Shannon entropy `-sum p_j log p_j` of that distribution.
//! Nodes whose neighbors have many, evenly spread connections score high.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::centrality::{Measure, ScoreVector};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Tolerance on `sum(p) == 1` accepted by [`shannon_entropy`].
pub const PROBABILITY_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum LogBase {
    #[default]
    E,
    Two,
    Ten,
}

impl LogBase {
    pub fn as_str(self) -> &'static str {
        match self {
            LogBase::E => "e",
            LogBase::Two => "2",
            LogBase::Ten => "10",
        }
    }

    /// Converts a natural-log quantity into this base.
    #[inline]
    fn in_base(self, nats: f64) -> f64 {
        match self {
            LogBase::E => nats,
            LogBase::Two => nats / std::f64::consts::LN_2,
            LogBase::Ten => nats / std::f64::consts::LN_10,
        }
    }

    pub fn log(self, x: f64) -> f64 {
        self.in_base(x.ln())
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LogBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(LogBase::E),
            "2" => Ok(LogBase::Two),
            "10" => Ok(LogBase::Ten),
            other => Err(Error::Argument(format!("unsupported log base {other:?}"))),
        }
    }
}

/// Which degree each ego-network member contributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum DegreeView {
    /// Degree in the whole graph.
    #[default]
    Global,
    /// Degree counting only edges inside the ego network.
    Induced,
}

impl DegreeView {
    pub fn as_str(self) -> &'static str {
        match self {
            DegreeView::Global => "global",
            DegreeView::Induced => "induced",
        }
    }
}

impl fmt::Display for DegreeView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DegreeView {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "global" => Ok(DegreeView::Global),
            "induced" => Ok(DegreeView::Induced),
            other => Err(Error::Argument(format!("unknown degree view {other:?}"))),
        }
    }
}

/// Settings for [`local_structure_entropy`]. `0 * log 0` is always taken
/// as 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct EntropyConfig {
    pub log_base: LogBase,
    pub degree_view: DegreeView,
}

impl EntropyConfig {
    pub fn mode(&self) -> Vec<(String, String)> {
        vec![
            ("log_base".into(), self.log_base.to_string()),
            ("degree_view".into(), self.degree_view.to_string()),
        ]
    }
}

/// `-sum p_i log p_i` in the given base, with `0 log 0 = 0`.
///
/// Fails on negative or non-finite entries, or when the entries do not sum
/// to 1 within [`PROBABILITY_SUM_TOLERANCE`].
pub fn shannon_entropy(p: &[f64], base: LogBase) -> Result<f64> {
    if let Some(bad) = p.iter().find(|x| !(x.is_finite() && **x >= 0.0)) {
        return Err(Error::Domain(format!("entry {bad} is not a probability")));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > PROBABILITY_SUM_TOLERANCE {
        return Err(Error::Domain(format!("entries sum to {total}, not 1")));
    }
    let nats: f64 = p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.ln()).sum();
    // Clamp the -0.0 produced by a single certain outcome.
    Ok(base.in_base(nats).max(0.0))
}

/// Entropy of the degree distribution over `degrees`. Empty or all-zero
/// input has no distribution and scores 0.
///
/// Degrees are summed in ascending order, so equal multisets give
/// bit-identical results regardless of member order.
pub fn degree_entropy(degrees: &[usize], base: LogBase) -> Result<f64> {
    let total: usize = degrees.iter().sum();
    if total == 0 {
        return Ok(0.0);
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let total = total as f64;
    let p: Vec<f64> = sorted.iter().map(|&d| d as f64 / total).collect();
    shannon_entropy(&p, base)
}

/// Member degrees of the ego network of `focus` under `view`, focus first.
fn ego_degrees(g: &Graph, focus: NodeId, view: DegreeView) -> Result<Vec<usize>> {
    let neighbors = g.neighbors(focus)?;
    let mut degrees = Vec::with_capacity(neighbors.len() + 1);
    degrees.push(neighbors.len());
    match view {
        DegreeView::Global => degrees.extend(neighbors.iter().map(|&m| g.adj(m).len())),
        // Each neighbor keeps its edge to the focus plus its common neighbors.
        DegreeView::Induced => degrees.extend(
            neighbors
                .iter()
                .map(|&m| 1 + sorted_intersection_len(neighbors, g.adj(m))),
        ),
    }
    Ok(degrees)
}

fn sorted_intersection_len(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

pub fn local_structure_entropy(g: &Graph, i: NodeId, cfg: &EntropyConfig) -> Result<f64> {
    let degrees = ego_degrees(g, i, cfg.degree_view)?;
    if degrees.len() == 1 {
        // Isolated node.
        return Ok(0.0);
    }
    degree_entropy(&degrees, cfg.log_base)
}

pub fn lse_all(g: &Graph, cfg: &EntropyConfig) -> ScoreVector {
    let scores: Vec<f64> = (0..g.node_count())
        .into_par_iter()
        .map(|i| {
            local_structure_entropy(g, NodeId(i), cfg)
                .expect("node ids in range and degree distributions are valid")
        })
        .collect();
    ScoreVector::new(Measure::Lse, cfg.mode(), g.labels().to_vec(), scores)
        .expect("one finite score per node")
}
