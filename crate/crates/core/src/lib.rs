//! Node influence measures for simple undirected graphs.
//!
//! - [`graph`]: edge-list ingestion, degrees and ego networks.
//! - [`centrality`]: degree and Brandes betweenness baselines.
//! - [`lse`]: local structure entropy, the Shannon entropy of the degree
//!   distribution inside each node's ego network.
//! - [`si`]: seeded Monte Carlo SI spreading used to judge rankings.
//! - [`ranking`]: top-k lists, overlaps and comparison reports.

pub mod centrality;
pub mod error;
pub mod graph;
pub mod lse;
pub mod ranking;
pub mod si;

pub use centrality::{betweenness, degree_centrality, BetweennessMode, Measure, ScoreVector};
pub use error::{Error, Result};
pub use graph::{compare_labels, load_edge_list, EgoNetwork, Graph, LoadWarning, NodeId};
pub use lse::{
    degree_entropy, local_structure_entropy, lse_all, shannon_entropy, DegreeView, EntropyConfig,
    LogBase,
};
pub use ranking::{compare_report, overlap, top_k, top_k_entries, RankingReport};
pub use si::{run_si, si_step, trace_replicate, InfectedSet, SIConfig, SITrajectory};

/// Zachary's karate club network as a whitespace edge list with 1-based
/// labels (34 nodes, 78 edges).
pub const KARATE_CLUB: &str = include_str!("../data/karate.txt");
