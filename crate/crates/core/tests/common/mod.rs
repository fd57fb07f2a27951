//! Shared fixtures and brute-force oracles. Nothing here calls the
//! algorithms under test.
#![allow(dead_code, clippy::needless_range_loop)]

use lse_core::{Graph, NodeId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn karate() -> Graph {
    lse_core::load_edge_list(lse_core::KARATE_CLUB.as_bytes())
        .unwrap()
        .0
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::from_index_edges(n, &edges)
}

/// Erdos-Renyi G(n, p).
pub fn gnp(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_index_edges(n, &edges)
}

/// Random recursive tree on `n` nodes.
pub fn random_tree(seed: u64, n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_index_edges(n, &edges)
}

/// Random tree plus `extra` random chords; always connected.
pub fn random_connected(seed: u64, n: usize, extra: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    if n > 1 {
        for _ in 0..extra {
            edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
        }
    }
    Graph::from_index_edges(n, &edges)
}

/// `m` distinct random edges on `n` nodes.
pub fn random_gnm(seed: u64, n: usize, m: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    while seen.len() < m {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            seen.insert((a.min(b), a.max(b)));
        }
    }
    let mut edges: Vec<_> = seen.into_iter().collect();
    edges.sort_unstable();
    Graph::from_index_edges(n, &edges)
}

/// A graph realising the worked ego network: centre "8" with neighbours
/// 7, 13, 9, 11, 10, 12 whose full-graph degrees are 2, 2, 4, 1, 3, 1.
pub fn worked_example() -> Graph {
    Graph::from_edges([
        ("8", "7"),
        ("8", "13"),
        ("8", "9"),
        ("8", "11"),
        ("8", "10"),
        ("8", "12"),
        ("7", "13"),
        ("9", "a"),
        ("9", "b"),
        ("9", "c"),
        ("10", "d"),
        ("10", "e"),
    ])
}

pub const WORKED_DEGREES: [usize; 7] = [2, 2, 4, 1, 3, 1, 6];

/// `-sum p ln p` of the worked example, evaluated to 40 digits with mpmath.
pub const WORKED_ENTROPY: f64 = 1.767_377_934_530_019_3;

/// Entropy of a degree multiset as `ln D - (1/D) sum d ln d`, summed with
/// Kahan compensation. Algebraically equal to `-sum p ln p` but evaluated
/// along a different route.
pub fn entropy_oracle(degrees: &[usize]) -> f64 {
    let total: usize = degrees.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for &d in degrees.iter().filter(|&&d| d > 0) {
        let term = d as f64 * (d as f64).ln() - comp;
        let t = sum + term;
        comp = (t - sum) - term;
        sum = t;
    }
    (total as f64).ln() - sum / total as f64
}

/// All-pairs hop distances by Floyd-Warshall on a dense matrix.
pub fn all_pairs_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for (u, v) in g.edges() {
        d[u.index()][v.index()] = Some(1);
        d[v.index()][u.index()] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Explicitly lists every shortest path from `s` to `t`.
pub fn enumerate_geodesics(
    g: &Graph,
    dist: &[Vec<Option<usize>>],
    s: usize,
    t: usize,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let Some(target) = dist[s][t] else {
        return out;
    };
    let mut path = vec![s];
    fn walk(
        g: &Graph,
        dist: &[Vec<Option<usize>>],
        t: usize,
        target: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = *path.last().unwrap();
        if v == t {
            out.push(path.clone());
            return;
        }
        let hops = path.len() - 1;
        for w in g.neighbors(NodeId(v)).unwrap() {
            let w = w.index();
            // Stay on a geodesic: one hop closer to t each time.
            if dist[w][t] == Some(target - hops - 1) {
                path.push(w);
                walk(g, dist, t, target, path, out);
                path.pop();
            }
        }
    }
    walk(g, dist, t, target, &mut path, &mut out);
    out
}

pub struct BruteBetweenness {
    pub pair_normalized: Vec<f64>,
    pub eq1_literal: Vec<f64>,
    /// Sum over unordered pairs of the fraction of geodesics through each node.
    pub raw_dependency: Vec<f64>,
    /// Sum over connected unordered pairs of (average interior vertices per geodesic).
    pub interior_total: f64,
}

pub fn brute_betweenness(g: &Graph) -> BruteBetweenness {
    let n = g.node_count();
    let dist = all_pairs_distances(g);
    let mut paths = vec![vec![Vec::new(); n]; n];
    for s in 0..n {
        for t in s + 1..n {
            paths[s][t] = enumerate_geodesics(g, &dist, s, t);
        }
    }
    let mut raw = vec![0.0; n];
    let mut through = vec![0.0; n];
    let mut interior_total = 0.0;
    for s in 0..n {
        for t in s + 1..n {
            let ps = &paths[s][t];
            if ps.is_empty() {
                continue;
            }
            let sigma = ps.len() as f64;
            for p in ps {
                interior_total += (p.len() - 2) as f64 / sigma;
                for &v in &p[1..p.len() - 1] {
                    raw[v] += 1.0 / sigma;
                    through[v] += 1.0;
                }
            }
        }
    }
    let mut eq1 = vec![0.0; n];
    for i in 0..n {
        let mut denom = 0.0;
        for s in 0..n {
            for t in s + 1..n {
                if s != i && t != i {
                    denom += paths[s][t].len() as f64;
                }
            }
        }
        eq1[i] = if denom > 0.0 { through[i] / denom } else { 0.0 };
    }
    let pair_normalized = if n < 3 {
        vec![0.0; n]
    } else {
        let pairs = ((n - 1) * (n - 2)) as f64 / 2.0;
        raw.iter().map(|x| x / pairs).collect()
    };
    BruteBetweenness {
        pair_normalized,
        eq1_literal: eq1,
        raw_dependency: raw,
        interior_total,
    }
}

/// Nodes within `radius` hops of `source`, by repeated neighbourhood expansion.
pub fn ball(g: &Graph, source: usize, radius: usize) -> Vec<bool> {
    let mut inside = vec![false; g.node_count()];
    inside[source] = true;
    for _ in 0..radius {
        let current = inside.clone();
        for (u, v) in g.edges() {
            if current[u.index()] || current[v.index()] {
                inside[u.index()] = true;
                inside[v.index()] = true;
            }
        }
    }
    inside
}

/// Published per-node scores for the 21-node example network:
/// `(node, degree, betweenness, lse)`.
pub const PUBLISHED_SCORES: [(&str, f64, f64, f64); 21] = [
    ("1", 3.0, 0.033794, 0.695646),
    ("2", 3.0, 0.122504, 0.814568),
    ("3", 3.0, 0.090630, 0.772462),
    ("4", 2.0, 0.191628, 0.619477),
    ("5", 5.0, 0.016513, 0.940893),
    ("6", 3.0, 0.023810, 0.662452),
    ("7", 5.0, 0.068356, 0.911680),
    ("8", 3.0, 0.073349, 0.814568),
    ("9", 1.0, 0.003840, 0.366204),
    ("10", 4.0, 0.064516, 0.761745),
    ("11", 2.0, 0.065284, 0.657540),
    ("12", 3.0, 0.079493, 0.851657),
    ("13", 2.0, 0.003840, 0.664304),
    ("14", 2.0, 0.048003, 0.643775),
    ("15", 6.0, 0.022273, 0.977730),
    ("16", 2.0, 0.028418, 0.619477),
    ("17", 3.0, 0.003072, 0.808073),
    ("18", 4.0, 0.033410, 0.814134),
    ("19", 4.0, 0.011137, 0.814134),
    ("20", 3.0, 0.014977, 0.797539),
    ("21", 3.0, 0.001152, 0.745088),
];

pub fn published_column(measure: lse_core::Measure) -> lse_core::ScoreVector {
    lse_core::ScoreVector::from_pairs(
        measure,
        PUBLISHED_SCORES.iter().map(|&(node, deg, bet, lse)| {
            let v = match measure {
                lse_core::Measure::Degree => deg,
                lse_core::Measure::Betweenness => bet,
                lse_core::Measure::Lse => lse,
            };
            (node, v)
        }),
    )
    .unwrap()
}
