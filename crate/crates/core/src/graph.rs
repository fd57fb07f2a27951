//! Immutable simple undirected graphs.
//!
//! Nodes carry an external label (any whitespace-free token) and a dense
//! internal id in `0..node_count`. Adjacency lists are sorted and free of
//! duplicates and self-loops, so `degree(i)` is simply the list length.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Dense internal node identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Something the loader tolerated but dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoadWarning {
    SelfLoop { line: usize, label: String },
    DuplicateEdge { line: usize, a: String, b: String },
}

impl fmt::Display for LoadWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadWarning::SelfLoop { line, label } => {
                write!(f, "line {line}: self-loop on {label} dropped")
            }
            LoadWarning::DuplicateEdge { line, a, b } => {
                write!(f, "line {line}: duplicate edge {a}-{b} collapsed")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    edge_count: usize,
}

#[derive(Default)]
struct Builder {
    adjacency: Vec<Vec<NodeId>>,
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
    edges: HashSet<(NodeId, NodeId)>,
}

enum Insert {
    Added,
    SelfLoop,
    Duplicate,
}

impl Builder {
    fn node(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len());
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        self.adjacency.push(Vec::new());
        id
    }

    fn edge(&mut self, a: &str, b: &str) -> Insert {
        let u = self.node(a);
        let v = self.node(b);
        if u == v {
            return Insert::SelfLoop;
        }
        let key = if u < v { (u, v) } else { (v, u) };
        if !self.edges.insert(key) {
            return Insert::Duplicate;
        }
        self.adjacency[u.0].push(v);
        self.adjacency[v.0].push(u);
        Insert::Added
    }

    fn finish(mut self) -> Graph {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
        Graph {
            adjacency: self.adjacency,
            labels: self.labels,
            index: self.index,
            edge_count: self.edges.len(),
        }
    }
}

impl Graph {
    /// Graph with no nodes.
    pub fn empty() -> Self {
        Builder::default().finish()
    }

    /// Builds a graph from labelled edges. Self-loops and repeated edges are
    /// dropped silently; use [`load_edge_list`] when they should be reported.
    pub fn from_edges<I, L>(edges: I) -> Self
    where
        I: IntoIterator<Item = (L, L)>,
        L: AsRef<str>,
    {
        let mut b = Builder::default();
        for (x, y) in edges {
            b.edge(x.as_ref(), y.as_ref());
        }
        b.finish()
    }

    /// Builds a graph on nodes `0..n` labelled by their decimal index.
    /// Isolated nodes are kept.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut b = Builder::default();
        for i in 0..n {
            b.node(&i.to_string());
        }
        for &(x, y) in edges {
            assert!(x < n && y < n, "edge ({x}, {y}) out of range for {n} nodes");
            b.edge(&x.to_string(), &y.to_string());
        }
        b.finish()
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        (0..self.node_count()).map(NodeId)
    }

    /// All edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |v| v.0 > u)
                .map(move |v| (NodeId(u), v))
        })
    }

    pub fn contains(&self, id: NodeId) -> bool {
        id.0 < self.adjacency.len()
    }

    fn check(&self, id: NodeId) -> Result<()> {
        if self.contains(id) {
            Ok(())
        } else {
            Err(Error::UnknownNode(id.0))
        }
    }

    pub fn degree(&self, id: NodeId) -> Result<usize> {
        self.check(id)?;
        Ok(self.adjacency[id.0].len())
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, id: NodeId) -> Result<&[NodeId]> {
        self.check(id)?;
        Ok(&self.adjacency[id.0])
    }

    /// Unchecked neighbor access for hot loops over valid ids.
    #[inline]
    pub(crate) fn adj(&self, id: NodeId) -> &[NodeId] {
        &self.adjacency[id.0]
    }

    pub fn label(&self, id: NodeId) -> Result<&str> {
        self.check(id)?;
        Ok(&self.labels[id.0])
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node_by_label(&self, label: &str) -> Result<NodeId> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Focus node plus its neighbors, with full-graph and induced degrees.
    pub fn ego_network(&self, focus: NodeId) -> Result<EgoNetwork> {
        self.check(focus)?;
        let neighbors = self.adj(focus);
        let mut members = Vec::with_capacity(neighbors.len() + 1);
        members.push(focus);
        members.extend_from_slice(neighbors);

        let degrees_global = members.iter().map(|&m| self.adj(m).len()).collect();
        // Neighbor lists are sorted, so membership is a binary search.
        let in_ego = |x: NodeId| x == focus || neighbors.binary_search(&x).is_ok();
        let degrees_induced = members
            .iter()
            .map(|&m| self.adj(m).iter().filter(|&&x| in_ego(x)).count())
            .collect();

        Ok(EgoNetwork {
            focus,
            members,
            degrees_global,
            degrees_induced,
        })
    }

    /// Hop distances from `source`; `None` for unreachable nodes.
    pub fn bfs_distances(&self, source: NodeId) -> Result<Vec<Option<usize>>> {
        self.check(source)?;
        let mut dist = vec![None; self.node_count()];
        dist[source.0] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v.0].unwrap_or(0);
            for &w in self.adj(v) {
                if dist[w.0].is_none() {
                    dist[w.0] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// Number of nodes in the connected component containing `id`.
    pub fn component_size(&self, id: NodeId) -> Result<usize> {
        Ok(self.bfs_distances(id)?.iter().flatten().count())
    }

    pub fn is_connected(&self) -> bool {
        self.is_empty() || self.component_size(NodeId(0)).unwrap_or(0) == self.node_count()
    }
}

/// A node together with its direct neighbors.
///
/// `members[0]` is always the focus; the remaining members follow in
/// ascending id order. Both degree vectors are aligned with `members`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EgoNetwork {
    pub focus: NodeId,
    pub members: Vec<NodeId>,
    pub degrees_global: Vec<usize>,
    pub degrees_induced: Vec<usize>,
}

impl EgoNetwork {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Reads a whitespace-separated edge list.
///
/// Every data line must hold exactly two tokens. Blank lines and lines
/// starting with `#` are skipped. Self-loops and repeated edges are dropped,
/// logged, and returned as warnings.
pub fn load_edge_list<R: BufRead>(source: R) -> Result<(Graph, Vec<LoadWarning>)> {
    let mut b = Builder::default();
    let mut warnings = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let [a, b_tok] = tokens[..] else {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected 2 tokens, found {}", tokens.len()),
            });
        };
        let warning = match b.edge(a, b_tok) {
            Insert::Added => continue,
            Insert::SelfLoop => LoadWarning::SelfLoop {
                line: lineno,
                label: a.to_owned(),
            },
            Insert::Duplicate => LoadWarning::DuplicateEdge {
                line: lineno,
                a: a.to_owned(),
                b: b_tok.to_owned(),
            },
        };
        log::warn!("{warning}");
        warnings.push(warning);
    }
    Ok((b.finish(), warnings))
}

/// Label order used for every tie-break: integer labels compare
/// numerically and sort before non-numeric labels, which compare as strings.
pub fn compare_labels(a: &str, b: &str) -> Ordering {
    match (a.parse::<i128>(), b.parse::<i128>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}
