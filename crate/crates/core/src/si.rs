//! Monte Carlo SI (susceptible-infective) spreading.
//!
//! Rounds are synchronous: every node infected before round `t` tries each
//! susceptible neighbor once with probability `beta`, and nodes infected in
//! round `t` start transmitting in round `t + 1`. A susceptible node with
//! `k` infected neighbors is therefore caught with probability
//! `1 - (1 - beta)^k`. Nobody recovers.
//!
//! Replicate `r` draws from ChaCha8 stream `r` of the configured seed, so a
//! trajectory depends only on `(graph, config)` and never on scheduling.

use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

pub const DEFAULT_BETA: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SIConfig {
    pub seed_node: NodeId,
    /// Per-contact infection probability.
    pub beta: f64,
    /// Number of synchronous rounds.
    pub steps: usize,
    pub replicates: usize,
    pub rng_seed: u64,
}

impl SIConfig {
    pub fn new(seed_node: NodeId) -> Self {
        SIConfig {
            seed_node,
            beta: DEFAULT_BETA,
            steps: 10,
            replicates: 1000,
            rng_seed: 42,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.beta) {
            return Err(Error::Argument(format!(
                "beta must lie in [0, 1], got {}",
                self.beta
            )));
        }
        if self.steps == 0 {
            return Err(Error::Argument("steps must be at least 1".into()));
        }
        if self.replicates == 0 {
            return Err(Error::Argument("replicates must be at least 1".into()));
        }
        Ok(())
    }

    /// Independent random stream for one replicate.
    pub fn replicate_rng(&self, replicate: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.rng_seed);
        rng.set_stream(replicate as u64);
        rng
    }
}

/// Set of infected nodes over a fixed node universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfectedSet {
    flags: Vec<bool>,
    count: usize,
}

impl InfectedSet {
    pub fn new(node_count: usize, infected: impl IntoIterator<Item = NodeId>) -> Self {
        let mut flags = vec![false; node_count];
        for v in infected {
            flags[v.index()] = true;
        }
        let count = flags.iter().filter(|&&f| f).count();
        InfectedSet { flags, count }
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.flags.get(v.index()).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn as_flags(&self) -> &[bool] {
        &self.flags
    }

    /// Infected nodes in ascending id order.
    pub fn members(&self) -> Vec<NodeId> {
        self.flags
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(i, _)| NodeId(i))
            .collect()
    }

    pub fn fraction(&self) -> f64 {
        self.count as f64 / self.flags.len() as f64
    }
}

/// One synchronous round. `spreaders` must all be infected. Spreaders left
/// with no susceptible neighbor are dropped from the list, which is then
/// extended with the newly infected nodes.
fn spread_round<R: Rng + ?Sized>(
    g: &Graph,
    infected: &mut [bool],
    spreaders: &mut Vec<NodeId>,
    beta: f64,
    rng: &mut R,
) -> usize {
    if beta <= 0.0 {
        return 0;
    }
    let before = spreaders.len();
    let mut kept = 0;
    for idx in 0..before {
        let v = spreaders[idx];
        let mut susceptible = 0;
        for &w in g.adj(v) {
            if infected[w.index()] {
                continue;
            }
            susceptible += 1;
            // New infections are appended past `before`, so they cannot
            // transmit until the next round.
            if rng.gen::<f64>() < beta {
                infected[w.index()] = true;
                spreaders.push(w);
            }
        }
        if susceptible > 0 {
            spreaders[kept] = v;
            kept += 1;
        }
    }
    let added = spreaders.len() - before;
    spreaders.copy_within(before.., kept);
    spreaders.truncate(kept + added);
    added
}

/// Applies one SI round to `infected` and returns the new set.
pub fn si_step<R: Rng + ?Sized>(
    g: &Graph,
    infected: &InfectedSet,
    beta: f64,
    rng: &mut R,
) -> InfectedSet {
    let mut flags = infected.flags.clone();
    let mut spreaders = infected.members();
    let added = spread_round(g, &mut flags, &mut spreaders, beta, rng);
    InfectedSet {
        flags,
        count: infected.count + added,
    }
}

/// Runs one replicate, calling `observe(t, infected_flags)` for every
/// `t = 0..=steps`. Returns the infected count after each step.
pub fn trace_replicate<F>(
    g: &Graph,
    cfg: &SIConfig,
    replicate: usize,
    mut observe: F,
) -> Result<Vec<usize>>
where
    F: FnMut(usize, &[bool]),
{
    cfg.validate()?;
    g.degree(cfg.seed_node)?;
    let mut rng = cfg.replicate_rng(replicate);
    let mut infected = vec![false; g.node_count()];
    infected[cfg.seed_node.index()] = true;
    let mut spreaders = vec![cfg.seed_node];
    let mut count = 1;
    let mut counts = Vec::with_capacity(cfg.steps + 1);
    counts.push(count);
    observe(0, &infected);
    for t in 1..=cfg.steps {
        count += spread_round(g, &mut infected, &mut spreaders, cfg.beta, &mut rng);
        counts.push(count);
        observe(t, &infected);
    }
    Ok(counts)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepStats {
    pub step: usize,
    pub mean_infected_fraction: f64,
    /// Sample standard deviation across replicates (0 for one replicate).
    pub stddev: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SITrajectory {
    pub node_count: usize,
    pub replicates: usize,
    pub points: Vec<StepStats>,
}

impl SITrajectory {
    pub fn final_mean(&self) -> f64 {
        self.points.last().map_or(0.0, |p| p.mean_infected_fraction)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "step,mean_infected_fraction,stddev,replicates")?;
        for p in &self.points {
            writeln!(
                out,
                "{},{},{},{}",
                p.step, p.mean_infected_fraction, p.stddev, self.replicates
            )?;
        }
        Ok(())
    }
}

const REPLICATE_CHUNK: usize = 64;

/// Integer sums of counts and squared counts per step. Integer addition is
/// associative, so the reduction order cannot change the result.
struct Moments {
    sum: Vec<u64>,
    sum_sq: Vec<u128>,
}

impl Moments {
    fn zero(len: usize) -> Self {
        Moments {
            sum: vec![0; len],
            sum_sq: vec![0; len],
        }
    }

    fn add_counts(&mut self, counts: &[usize]) {
        for (t, &c) in counts.iter().enumerate() {
            self.sum[t] += c as u64;
            self.sum_sq[t] += (c as u128) * (c as u128);
        }
    }

    fn merge(mut self, other: Moments) -> Moments {
        for t in 0..self.sum.len() {
            self.sum[t] += other.sum[t];
            self.sum_sq[t] += other.sum_sq[t];
        }
        self
    }
}

pub fn run_si(g: &Graph, cfg: &SIConfig) -> Result<SITrajectory> {
    cfg.validate()?;
    g.degree(cfg.seed_node)?;
    let len = cfg.steps + 1;
    let replicates: Vec<usize> = (0..cfg.replicates).collect();
    let moments = replicates
        .par_chunks(REPLICATE_CHUNK)
        .map(|chunk| {
            let mut m = Moments::zero(len);
            for &r in chunk {
                let counts = trace_replicate(g, cfg, r, |_, _| {}).expect("config validated above");
                m.add_counts(&counts);
            }
            m
        })
        .reduce(|| Moments::zero(len), Moments::merge);

    let n = g.node_count() as f64;
    let reps = cfg.replicates as u128;
    let points = (0..len)
        .map(|t| {
            let s1 = moments.sum[t] as u128;
            let s2 = moments.sum_sq[t];
            let mean_count = s1 as f64 / reps as f64;
            let stddev = if reps > 1 {
                // reps * s2 >= s1^2 by Cauchy-Schwarz.
                let numer = reps * s2 - s1 * s1;
                (numer as f64 / (reps * (reps - 1)) as f64).sqrt() / n
            } else {
                0.0
            };
            StepStats {
                step: t,
                mean_infected_fraction: mean_count / n,
                stddev,
            }
        })
        .collect();
    Ok(SITrajectory {
        node_count: g.node_count(),
        replicates: cfg.replicates,
        points,
    })
}
