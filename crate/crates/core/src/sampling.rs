//! Edge random, node random, and random-walk sampling.
//!
//! All three strategies are pure functions of `(graph, spec)`: the same seed
//! yields the same sample on every platform.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::seed;

#[derive(
    Debug,
    Clone,
    Copy,
    PartialEq,
    Eq,
    Hash,
    PartialOrd,
    Ord,
    Serialize,
    Deserialize,
    clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Edge random sampling: uniform edge subset, nodes are the endpoints.
    Ers,
    /// Node random sampling: uniform node subset, induced subgraph.
    Nrs,
    /// Random-walk sampling: most visited nodes, induced subgraph.
    Rw,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Ers, Strategy::Nrs, Strategy::Rw];

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Ers => "ers",
            Strategy::Nrs => "nrs",
            Strategy::Rw => "rw",
        }
    }

    /// Whether `target` counts edges (ERS) rather than nodes.
    pub fn targets_edges(self) -> bool {
        self == Strategy::Ers
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ers" => Ok(Strategy::Ers),
            "nrs" => Ok(Strategy::Nrs),
            "rw" => Ok(Strategy::Rw),
            other => Err(Error::InvalidSpec(format!("unknown strategy {other:?}"))),
        }
    }
}

pub const DEFAULT_RW_ITERATIONS: usize = 10_000;
pub const DEFAULT_RW_RUNS: usize = 10;

fn default_rw_iterations() -> usize {
    DEFAULT_RW_ITERATIONS
}

fn default_rw_runs() -> usize {
    DEFAULT_RW_RUNS
}

/// What to sample and how. `target` counts edges for ERS, nodes otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub strategy: Strategy,
    pub target: usize,
    #[serde(default = "default_rw_iterations")]
    pub rw_iterations: usize,
    #[serde(default = "default_rw_runs")]
    pub rw_runs: usize,
    pub seed: u64,
}

impl SampleSpec {
    pub fn new(strategy: Strategy, target: usize, seed: u64) -> Self {
        SampleSpec {
            strategy,
            target,
            rw_iterations: DEFAULT_RW_ITERATIONS,
            rw_runs: DEFAULT_RW_RUNS,
            seed,
        }
    }

    pub fn with_walks(mut self, iterations: usize, runs: usize) -> Self {
        self.rw_iterations = iterations;
        self.rw_runs = runs;
        self
    }

    /// Checks the graph-independent constraints.
    pub fn validate_params(&self) -> Result<()> {
        if self.target == 0 {
            return Err(Error::InvalidSpec("target must be at least 1".into()));
        }
        if self.strategy == Strategy::Rw && (self.rw_iterations == 0 || self.rw_runs == 0) {
            return Err(Error::InvalidSpec(
                "rw_iterations and rw_runs must be at least 1".into(),
            ));
        }
        Ok(())
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.validate_params()?;
        let (limit, unit) = if self.strategy.targets_edges() {
            (g.edge_count(), "edges")
        } else {
            (g.node_count(), "nodes")
        };
        if self.target > limit {
            return Err(Error::InvalidSpec(format!(
                "target {} exceeds the graph's {limit} {unit}",
                self.target
            )));
        }
        Ok(())
    }
}

/// Draws the sample described by `spec`.
pub fn sample(g: &Graph, spec: &SampleSpec) -> Result<Graph> {
    spec.validate(g)?;
    match spec.strategy {
        Strategy::Ers => edge_random_sample(g, spec.target, spec.seed),
        Strategy::Nrs => node_random_sample(g, spec.target, spec.seed),
        Strategy::Rw => {
            random_walk_sample(g, spec.target, spec.rw_iterations, spec.rw_runs, spec.seed)
        }
    }
}

/// Uniform `m`-subset of the edges, without replacement. The sample's node
/// set is exactly the endpoints of the chosen edges.
pub fn edge_random_sample(g: &Graph, m: usize, seed: u64) -> Result<Graph> {
    if m == 0 || m > g.edge_count() {
        return Err(Error::InvalidSpec(format!(
            "edge count {m} outside 1..={}",
            g.edge_count()
        )));
    }
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let mut rng = seed::rng(seed);
    let mut picked = index::sample(&mut rng, edges.len(), m).into_vec();
    picked.sort_unstable();
    let chosen: Vec<(u32, u32)> = picked.into_iter().map(|i| edges[i]).collect();
    Ok(g.edge_subgraph(&chosen))
}

/// Uniform `k`-subset of the nodes, without replacement, and every edge
/// between them. Isolated picks stay in the sample.
pub fn node_random_sample(g: &Graph, k: usize, seed: u64) -> Result<Graph> {
    if k == 0 || k > g.node_count() {
        return Err(Error::InvalidSpec(format!(
            "node count {k} outside 1..={}",
            g.node_count()
        )));
    }
    let mut rng = seed::rng(seed);
    let keep: Vec<NodeId> = index::sample(&mut rng, g.node_count(), k)
        .into_iter()
        .map(NodeId::from)
        .collect();
    g.induced_subgraph(&keep)
}

/// Per-node visit tallies summed over all walk runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VisitCounter {
    counts: Vec<u64>,
}

impl VisitCounter {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Number of distinct nodes visited at least once.
    pub fn visited(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    /// The `x` most visited nodes, highest count first, ties by ascending id.
    pub fn top(&self, x: usize) -> Result<Vec<NodeId>> {
        let visited = self.visited();
        if x > visited {
            return Err(Error::InsufficientVisited {
                requested: x,
                visited,
            });
        }
        let mut order: Vec<u32> = (0..self.counts.len() as u32)
            .filter(|&u| self.counts[u as usize] > 0)
            .collect();
        order.sort_by(|&a, &b| {
            self.counts[b as usize]
                .cmp(&self.counts[a as usize])
                .then(a.cmp(&b))
        });
        Ok(order.into_iter().take(x).map(NodeId).collect())
    }
}

/// Runs `runs` independent walks of `iterations` positions each and tallies
/// every position, the start included.
///
/// Each run starts at a uniformly drawn node of degree at least one and moves
/// to a uniformly random neighbor at every step. Run `r` draws from its own
/// stream seeded with `seed::derive(seed, [r])`, so runs may execute in
/// parallel without changing the result.
pub fn random_walk_visit_counts(
    g: &Graph,
    iterations: usize,
    runs: usize,
    seed: u64,
) -> Result<VisitCounter> {
    if iterations == 0 || runs == 0 {
        return Err(Error::InvalidSpec(
            "rw_iterations and rw_runs must be at least 1".into(),
        ));
    }
    let starts: Vec<u32> = (0..g.node_count() as u32)
        .filter(|&u| g.degree(u as usize) > 0)
        .collect();
    if starts.is_empty() {
        return Err(Error::WalkImpossible);
    }

    let walks: Vec<Vec<u32>> = (0..runs as u64)
        .into_par_iter()
        .map(|run| {
            let mut rng = seed::rng(seed::derive(seed, &[run]));
            let mut current = starts[rng.random_range(0..starts.len())];
            let mut trail = Vec::with_capacity(iterations);
            trail.push(current);
            for _ in 1..iterations {
                let nbrs = g.neighbors(current as usize);
                current = nbrs[rng.random_range(0..nbrs.len())];
                trail.push(current);
            }
            trail
        })
        .collect();

    let mut counts = vec![0u64; g.node_count()];
    for trail in &walks {
        for &u in trail {
            counts[u as usize] += 1;
        }
    }
    Ok(VisitCounter { counts })
}

/// Induced subgraph on the `x` most visited nodes of the summed walks.
pub fn random_walk_sample(
    g: &Graph,
    x: usize,
    iterations: usize,
    runs: usize,
    seed: u64,
) -> Result<Graph> {
    if x == 0 || x > g.node_count() {
        return Err(Error::InvalidSpec(format!(
            "node count {x} outside 1..={}",
            g.node_count()
        )));
    }
    let counter = random_walk_visit_counts(g, iterations, runs, seed)?;
    let top = counter.top(x)?;
    g.induced_subgraph(&top)
}

/// Sidecar record written next to a persisted sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub spec: SampleSpec,
    pub input: String,
    pub source_nodes: usize,
    pub source_edges: usize,
    pub sample_nodes: usize,
    pub sample_edges: usize,
}
