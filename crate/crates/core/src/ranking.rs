//! Top-k rankings and their pairwise overlap.

use std::collections::HashSet;
use std::io::{self, Write};

use crate::centrality::{betweenness, degree_centrality, BetweennessMode, Measure, ScoreVector};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lse::{lse_all, EntropyConfig};

pub const DEFAULT_K: usize = 6;

/// Highest-scoring `(label, score)` entries, score descending then label
/// ascending, truncated to `k`.
pub fn top_k_entries(scores: &ScoreVector, k: usize) -> Result<Vec<(String, f64)>> {
    if k == 0 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    Ok(scores
        .ranked_positions()
        .into_iter()
        .take(k)
        .map(|i| (scores.labels()[i].clone(), scores.scores()[i]))
        .collect())
}

pub fn top_k(scores: &ScoreVector, k: usize) -> Result<Vec<String>> {
    Ok(top_k_entries(scores, k)?
        .into_iter()
        .map(|(label, _)| label)
        .collect())
}

/// Fraction of `a`'s entries that also appear in `b`. Both lists must be
/// nonempty and of equal length.
pub fn overlap<S: AsRef<str>>(a: &[S], b: &[S]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Argument(format!(
            "cannot compare rankings of length {} and {}",
            a.len(),
            b.len()
        )));
    }
    if a.is_empty() {
        return Err(Error::Argument("cannot compare empty rankings".into()));
    }
    let left: HashSet<&str> = a.iter().map(AsRef::as_ref).collect();
    let right: HashSet<&str> = b.iter().map(AsRef::as_ref).collect();
    Ok(left.intersection(&right).count() as f64 / a.len() as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    pub measure: Measure,
    pub entries: Vec<(String, f64)>,
}

impl Ranking {
    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|(l, _)| l.as_str()).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapRow {
    pub a: Measure,
    pub b: Measure,
    /// Effective list length, `min(k, node_count)`.
    pub depth: usize,
    pub overlap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankingReport {
    pub k: usize,
    pub rankings: Vec<Ranking>,
    pub overlaps: Vec<OverlapRow>,
}

impl RankingReport {
    pub fn ranking(&self, measure: Measure) -> Option<&Ranking> {
        self.rankings.iter().find(|r| r.measure == measure)
    }

    pub fn overlap(&self, a: Measure, b: Measure) -> Option<f64> {
        if a == b {
            return self.ranking(a).map(|_| 1.0);
        }
        self.overlaps
            .iter()
            .find(|o| (o.a, o.b) == (a, b) || (o.a, o.b) == (b, a))
            .map(|o| o.overlap)
    }

    /// Two CSV blocks separated by a blank line: the rankings
    /// (`measure,rank,node,score`) then the overlaps
    /// (`measure_a,measure_b,k,overlap`).
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "measure,rank,node,score")?;
        for r in &self.rankings {
            for (rank, (label, score)) in r.entries.iter().enumerate() {
                writeln!(out, "{},{},{},{}", r.measure, rank + 1, label, score)?;
            }
        }
        writeln!(out)?;
        writeln!(out, "measure_a,measure_b,k,overlap")?;
        for o in &self.overlaps {
            writeln!(out, "{},{},{},{}", o.a, o.b, o.depth, o.overlap)?;
        }
        Ok(())
    }
}

/// Builds a report from already computed score vectors, one per measure.
pub fn report_from_scores(vectors: &[ScoreVector], k: usize) -> Result<RankingReport> {
    let rankings = vectors
        .iter()
        .map(|v| {
            Ok(Ranking {
                measure: v.measure,
                entries: top_k_entries(v, k)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut overlaps = Vec::new();
    for (i, a) in rankings.iter().enumerate() {
        for b in &rankings[i + 1..] {
            overlaps.push(OverlapRow {
                a: a.measure,
                b: b.measure,
                depth: a.entries.len(),
                overlap: overlap(&a.labels(), &b.labels())?,
            });
        }
    }
    Ok(RankingReport {
        k,
        rankings,
        overlaps,
    })
}

/// Degree, betweenness and local structure entropy rankings of `g` with all
/// pairwise overlaps.
pub fn compare_report(
    g: &Graph,
    k: usize,
    cfg: &EntropyConfig,
    mode: BetweennessMode,
) -> Result<RankingReport> {
    if k == 0 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    if g.is_empty() {
        return Err(Error::Argument("graph has no nodes".into()));
    }
    let vectors = [degree_centrality(g), betweenness(g, mode), lse_all(g, cfg)];
    report_from_scores(&vectors, k)
}
