//! Degree and betweenness centrality, and the [`ScoreVector`] container
//! shared by every measure.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{compare_labels, Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Degree,
    Betweenness,
    Lse,
}

impl Measure {
    pub const ALL: [Measure; 3] = [Measure::Degree, Measure::Betweenness, Measure::Lse];

    pub fn as_str(self) -> &'static str {
        match self {
            Measure::Degree => "degree",
            Measure::Betweenness => "betweenness",
            Measure::Lse => "lse",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree" => Ok(Measure::Degree),
            "betweenness" => Ok(Measure::Betweenness),
            "lse" => Ok(Measure::Lse),
            other => Err(Error::Argument(format!("unknown measure {other:?}"))),
        }
    }
}

/// How betweenness sums are normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum BetweennessMode {
    /// Sum of pair dependencies divided by the number of unordered pairs
    /// not involving the node, `(n-1)(n-2)/2`.
    #[default]
    PairNormalized,
    /// Number of geodesics through the node divided by the total number of
    /// geodesics between pairs not involving it.
    Eq1Literal,
}

impl BetweennessMode {
    pub fn as_str(self) -> &'static str {
        match self {
            BetweennessMode::PairNormalized => "pair-normalized",
            BetweennessMode::Eq1Literal => "eq1-literal",
        }
    }
}

impl fmt::Display for BetweennessMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BetweennessMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pair-normalized" => Ok(BetweennessMode::PairNormalized),
            "eq1-literal" => Ok(BetweennessMode::Eq1Literal),
            other => Err(Error::Argument(format!(
                "unknown betweenness mode {other:?}"
            ))),
        }
    }
}

/// One finite score per node for a single measure, tagged with the settings
/// that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub measure: Measure,
    /// Ordered `key=value` settings, echoed into CSV output.
    pub mode: Vec<(String, String)>,
    labels: Vec<String>,
    scores: Vec<f64>,
}

impl ScoreVector {
    pub fn new(
        measure: Measure,
        mode: Vec<(String, String)>,
        labels: Vec<String>,
        scores: Vec<f64>,
    ) -> Result<Self> {
        if labels.len() != scores.len() {
            return Err(Error::Argument(format!(
                "{} labels but {} scores",
                labels.len(),
                scores.len()
            )));
        }
        if let Some(bad) = scores.iter().position(|s| !s.is_finite()) {
            return Err(Error::Argument(format!(
                "score for {} is not finite",
                labels[bad]
            )));
        }
        Ok(ScoreVector {
            measure,
            mode,
            labels,
            scores,
        })
    }

    /// Builds a score vector from `(label, score)` pairs, e.g. a published
    /// table of values with no graph behind it.
    pub fn from_pairs<I, L>(measure: Measure, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (L, f64)>,
        L: Into<String>,
    {
        let (labels, scores) = pairs.into_iter().map(|(l, s)| (l.into(), s)).unzip();
        Self::new(measure, Vec::new(), labels, scores)
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, id: NodeId) -> Option<f64> {
        self.scores.get(id.index()).copied()
    }

    pub fn score_of(&self, label: &str) -> Option<f64> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.scores[i])
    }

    pub fn mode_value(&self, key: &str) -> Option<&str> {
        self.mode
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Positions sorted by score descending, ties by label ascending.
    pub fn ranked_positions(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| {
            self.scores[b]
                .total_cmp(&self.scores[a])
                .then_with(|| compare_labels(&self.labels[a], &self.labels[b]))
        });
        order
    }

    /// One `# measure=... key=value ...` line.
    pub fn metadata_line(&self) -> String {
        let mut line = format!("# measure={}", self.measure);
        for (k, v) in &self.mode {
            line.push_str(&format!(" {k}={v}"));
        }
        line
    }

    /// Writes the metadata comment line, a `node,score` header and one row
    /// per node in ranked order.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "{}", self.metadata_line())?;
        writeln!(out, "node,score")?;
        for i in self.ranked_positions() {
            writeln!(out, "{},{}", self.labels[i], self.scores[i])?;
        }
        Ok(())
    }
}

pub fn degree_centrality(g: &Graph) -> ScoreVector {
    let scores = g.nodes().map(|v| g.adj(v).len() as f64).collect();
    ScoreVector {
        measure: Measure::Degree,
        mode: Vec::new(),
        labels: g.labels().to_vec(),
        scores,
    }
}

/// Sources handled by one parallel task. Partial sums are combined in chunk
/// order, so results do not depend on the thread count.
const SOURCE_CHUNK: usize = 32;

pub fn betweenness(g: &Graph, mode: BetweennessMode) -> ScoreVector {
    let n = g.node_count();
    let scores = if n < 3 {
        vec![0.0; n]
    } else {
        match mode {
            BetweennessMode::PairNormalized => pair_normalized(g),
            BetweennessMode::Eq1Literal => eq1_literal(g),
        }
    };
    ScoreVector {
        measure: Measure::Betweenness,
        mode: vec![("betweenness_mode".into(), mode.to_string())],
        labels: g.labels().to_vec(),
        scores,
    }
}

/// Reusable buffers for one single-source shortest-path pass.
struct Sssp {
    order: Vec<NodeId>,
    dist: Vec<u32>,
    sigma: Vec<f64>,
    acc: Vec<f64>,
}

const UNSEEN: u32 = u32::MAX;

impl Sssp {
    fn new(n: usize) -> Self {
        Sssp {
            order: Vec::with_capacity(n),
            dist: vec![UNSEEN; n],
            sigma: vec![0.0; n],
            acc: vec![0.0; n],
        }
    }

    /// BFS from `s`, filling distances, geodesic counts and the visit order.
    fn run(&mut self, g: &Graph, s: NodeId) {
        for &v in &self.order {
            self.dist[v.index()] = UNSEEN;
            self.sigma[v.index()] = 0.0;
            self.acc[v.index()] = 0.0;
        }
        self.order.clear();
        self.dist[s.index()] = 0;
        self.sigma[s.index()] = 1.0;
        self.order.push(s);
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head];
            head += 1;
            let dv = self.dist[v.index()];
            for &w in g.adj(v) {
                let wi = w.index();
                if self.dist[wi] == UNSEEN {
                    self.dist[wi] = dv + 1;
                    self.order.push(w);
                }
                if self.dist[wi] == dv + 1 {
                    self.sigma[wi] += self.sigma[v.index()];
                }
            }
        }
    }

    /// Walks the visit order backwards applying `acc[v] += f(v, w)` for
    /// every DAG edge v -> w. Predecessors are recovered from distances
    /// rather than stored.
    fn accumulate(&mut self, g: &Graph, step: impl Fn(f64, f64, f64) -> f64) {
        for &w in self.order.iter().rev() {
            let wi = w.index();
            let dw = self.dist[wi];
            if dw == 0 {
                continue;
            }
            let (sigma_w, acc_w) = (self.sigma[wi], self.acc[wi]);
            for &v in g.adj(w) {
                let vi = v.index();
                if self.dist[vi] + 1 == dw {
                    self.acc[vi] += step(self.sigma[vi], sigma_w, acc_w);
                }
            }
        }
    }
}

fn chunked_sum<F>(g: &Graph, width: usize, per_source: F) -> Vec<f64>
where
    F: Fn(&mut Sssp, NodeId, &mut [f64]) + Sync,
{
    let n = g.node_count();
    let partials: Vec<Vec<f64>> = (0..n)
        .collect::<Vec<_>>()
        .par_chunks(SOURCE_CHUNK)
        .map(|chunk| {
            let mut buf = Sssp::new(n);
            let mut total = vec![0.0; width];
            for &s in chunk {
                per_source(&mut buf, NodeId(s), &mut total);
            }
            total
        })
        .collect();
    let mut total = vec![0.0; width];
    for part in partials {
        for (t, p) in total.iter_mut().zip(part) {
            *t += p;
        }
    }
    total
}

fn pair_normalized(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let raw = chunked_sum(g, n, |buf, s, total| {
        buf.run(g, s);
        // Brandes: delta(v) += sigma_v / sigma_w * (1 + delta(w)).
        buf.accumulate(g, |sigma_v, sigma_w, delta_w| {
            sigma_v / sigma_w * (1.0 + delta_w)
        });
        for &v in &buf.order {
            if v != s {
                total[v.index()] += buf.acc[v.index()];
            }
        }
    });
    // Each unordered pair was visited from both endpoints.
    let pairs = ((n - 1) * (n - 2)) as f64 / 2.0;
    raw.into_iter().map(|x| x / 2.0 / pairs).collect()
}

fn eq1_literal(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    // Layout: [0, n) geodesics through v; [n, 2n) geodesics with v as endpoint.
    let sums = chunked_sum(g, 2 * n, |buf, s, total| {
        buf.run(g, s);
        // acc(v) = number of DAG paths from v to any later node:
        // acc(v) = sum over successors w of (1 + acc(w)).
        buf.accumulate(g, |_, _, acc_w| 1.0 + acc_w);
        for &v in &buf.order {
            let vi = v.index();
            if v != s {
                total[vi] += buf.sigma[vi] * buf.acc[vi];
                total[n + s.index()] += buf.sigma[vi];
            }
        }
    });
    let (through, endpoint) = sums.split_at(n);
    let all_pairs: f64 = endpoint.iter().sum::<f64>() / 2.0;
    through
        .iter()
        .zip(endpoint)
        .map(|(&num, &own)| {
            let denom = all_pairs - own;
            if denom > 0.0 {
                num / 2.0 / denom
            } else {
                0.0
            }
        })
        .collect()
}
