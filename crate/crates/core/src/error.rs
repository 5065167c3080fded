use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no edges")]
    NoEdges,

    #[error("unknown node id {0}")]
    UnknownNode(u32),

    #[error("invalid sample spec: {0}")]
    InvalidSpec(String),

    #[error("invalid experiment plan: {0}")]
    InvalidPlan(String),

    #[error("walk impossible: graph has no edges")]
    WalkImpossible,

    #[error("requested top {requested} nodes but only {visited} nodes were visited")]
    InsufficientVisited { requested: usize, visited: usize },

    #[error("density undefined for graphs with fewer than 2 nodes")]
    DensityUndefined,

    #[error("no connected component with at least 2 nodes")]
    NoMeasurableComponent,

    #[error("modularity undefined: graph has no edges")]
    ModularityUndefined,

    #[error("partition labels {labelled} nodes but graph has {nodes}")]
    MissingLabel { labelled: usize, nodes: usize },

    #[error("sweep results come from different datasets: {0}")]
    BaselineMismatch(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
