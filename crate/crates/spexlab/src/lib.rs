//! Spectral extremal graph theory lab.
//!
//! Builds the named graph families (`S_{n,k}`, `S_{n,k}+`, `F_{n,k}`,
//! intersecting even cycles, `K_{a,b}` variants), computes adjacency
//! spectral radii with certified accuracy, tests subgraph/minor
//! containment, enumerates small graphs up to isomorphism, and runs
//! brute-force EX/SPEX searches with prediction matching.

pub mod bounds;
pub mod canon;
pub mod construct;
pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod spectral;
pub mod subgraph;
pub mod verify;

pub use graph::{Bipartition, Graph};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph too large: n = {n}, limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid graph6{}: {msg}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Graph6 { msg: String, line: Option<usize> },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("partition is not equitable: {0}")]
    NotEquitable(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
