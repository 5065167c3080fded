//! Graph sampling for large social networks.
//!
//! Three strategies reduce a graph to a smaller sample:
//!
//! - **ERS** ([`sampling::edge_random_sample`]): a uniform subset of edges.
//! - **NRS** ([`sampling::node_random_sample`]): the subgraph induced by a
//!   uniform subset of nodes.
//! - **RW** ([`sampling::random_walk_sample`]): the subgraph induced by the
//!   nodes most visited by repeated random walks.
//!
//! [`metrics`] measures seven properties on any graph (average degree,
//! density, Louvain modularity, average clustering, diameter, average path
//! length, connected components) plus Brandes betweenness, and
//! [`experiment`] sweeps sample sizes with repeated draws to show how each
//! property evolves as the sample grows.
//!
//! ```
//! use netsample::{metrics, sampling, synthetic};
//!
//! let g = synthetic::social_graph(500, 4000, 1).unwrap();
//! let s = sampling::random_walk_sample(&g, 100, 2000, 5, 42).unwrap();
//! assert_eq!(s.node_count(), 100);
//! let report = metrics::full_report(&s, 42).unwrap();
//! assert!(report.avg_clustering > 0.0);
//! ```

pub mod cli;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod metrics;
pub mod sampling;
pub mod seed;
pub mod synthetic;

pub use error::{Error, Result};
pub use graph::{parse_edge_list, write_edge_list, Graph, LoadStats, NodeId};
pub use metrics::{full_report, PropertyReport};
pub use sampling::{SampleSpec, Strategy};

/// Runs `f` on a dedicated rayon pool of `workers` threads.
pub fn with_workers<T, F>(workers: usize, f: F) -> Result<T>
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    Ok(pool.install(f))
}
