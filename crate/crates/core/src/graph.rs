//! Undirected simple graphs in compressed sparse row form.
//!
//! Nodes carry dense internal ids `0..n` and keep their original dataset
//! label alongside, so samples can be written back in the dataset's own
//! vocabulary.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Comment directive that declares node labels ahead of the edge section.
///
/// Only emitted when a graph has isolated nodes, which an edge list alone
/// cannot represent.
pub const NODE_LABELS_DIRECTIVE: &str = "# node-labels:";

/// Dense internal node index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for NodeId {
    fn from(i: usize) -> Self {
        NodeId(i as u32)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Counters collected while building a graph from raw edge records.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoadStats {
    pub node_count: usize,
    pub edge_count: usize,
    pub duplicates_dropped: usize,
    pub self_loops_dropped: usize,
}

impl LoadStats {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("LoadStats serializes")
    }
}

/// Immutable undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    labels: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph over `labels.len()` nodes from internal-id pairs.
    ///
    /// Self-loops and repeated pairs (in either orientation) are dropped and
    /// counted in the returned stats.
    pub fn from_edges(labels: Vec<u64>, edges: &[(u32, u32)]) -> Result<(Graph, LoadStats)> {
        let n = labels.len();
        let mut degree = vec![0usize; n];
        let mut self_loops = 0;
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::UnknownNode(w));
                }
            }
            if u == v {
                self_loops += 1;
                continue;
            }
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0u32; offsets[n]];
        for &(u, v) in edges {
            if u == v {
                continue;
            }
            targets[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }

        // Sort and dedup each row, compacting in place.
        let mut compact_offsets = Vec::with_capacity(n + 1);
        compact_offsets.push(0);
        let mut write = 0;
        for u in 0..n {
            let (start, end) = (offsets[u], offsets[u + 1]);
            targets[start..end].sort_unstable();
            let row_start = write;
            for i in start..end {
                let t = targets[i];
                if write > row_start && targets[write - 1] == t {
                    continue;
                }
                targets[write] = t;
                write += 1;
            }
            compact_offsets.push(write);
        }
        targets.truncate(write);

        let edge_count = targets.len() / 2;
        let raw = edges.len() - self_loops;
        let graph = Graph {
            offsets: compact_offsets,
            targets,
            labels,
            edge_count,
        };
        let stats = LoadStats {
            node_count: n,
            edge_count,
            duplicates_dropped: raw - edge_count,
            self_loops_dropped: self_loops,
        };
        Ok((graph, stats))
    }

    /// Builds a graph whose labels equal the internal ids `0..n`.
    pub fn from_unlabeled(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        Graph::from_edges((0..n as u64).collect(), edges).map(|(g, _)| g)
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    /// Sorted neighbor list of `u`.
    #[inline]
    pub fn neighbors(&self, u: usize) -> &[u32] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn label(&self, u: usize) -> u64 {
        self.labels[u]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn contains(&self, id: NodeId) -> bool {
        id.index() < self.node_count()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            let u32_ = u as u32;
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u32_)
                .map(move |v| (u32_, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.node_count()).map(|u| self.degree(u)).collect()
    }

    /// Subgraph on `keep` containing every edge of `self` between kept nodes.
    ///
    /// Kept nodes are renumbered in ascending original-id order and keep their
    /// labels. Isolated kept nodes are retained. Duplicate ids in `keep` are
    /// ignored.
    pub fn induced_subgraph(&self, keep: &[NodeId]) -> Result<Graph> {
        let n = self.node_count();
        let mut sorted: Vec<u32> = Vec::with_capacity(keep.len());
        for &id in keep {
            if !self.contains(id) {
                return Err(Error::UnknownNode(id.0));
            }
            sorted.push(id.0);
        }
        sorted.sort_unstable();
        sorted.dedup();

        let mut remap = vec![u32::MAX; n];
        for (new, &old) in sorted.iter().enumerate() {
            remap[old as usize] = new as u32;
        }

        let mut offsets = Vec::with_capacity(sorted.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for &old in &sorted {
            // Neighbor rows are sorted by old id and `remap` is monotone, so
            // the new rows come out sorted too.
            targets.extend(
                self.neighbors(old as usize)
                    .iter()
                    .map(|&v| remap[v as usize])
                    .filter(|&v| v != u32::MAX),
            );
            offsets.push(targets.len());
        }
        let labels = sorted
            .iter()
            .map(|&old| self.labels[old as usize])
            .collect();
        let edge_count = targets.len() / 2;
        Ok(Graph {
            offsets,
            targets,
            labels,
            edge_count,
        })
    }

    /// Graph induced by a set of edges: the node set is exactly the edges'
    /// endpoints, renumbered in ascending original-id order.
    pub(crate) fn edge_subgraph(&self, chosen: &[(u32, u32)]) -> Graph {
        let mut remap = vec![u32::MAX; self.node_count()];
        for &(u, v) in chosen {
            remap[u as usize] = 0;
            remap[v as usize] = 0;
        }
        let mut labels = Vec::new();
        for (old, slot) in remap.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = labels.len() as u32;
                labels.push(self.labels[old]);
            }
        }
        let relabeled: Vec<(u32, u32)> = chosen
            .iter()
            .map(|&(u, v)| (remap[u as usize], remap[v as usize]))
            .collect();
        Graph::from_edges(labels, &relabeled)
            .expect("edge endpoints are remapped into range")
            .0
    }
}

/// Parses a SNAP-style edge list.
///
/// Lines starting with `#` are comments, except for the
/// [`NODE_LABELS_DIRECTIVE`] which pre-registers node labels. Every other
/// non-blank line must hold exactly two non-negative integer labels separated
/// by whitespace. Labels are mapped to dense ids in first-seen order.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<(Graph, LoadStats)> {
    let mut ids: HashMap<u64, u32> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut edges: Vec<(u32, u32)> = Vec::new();

    let mut intern = |label: u64, labels: &mut Vec<u64>| -> u32 {
        *ids.entry(label).or_insert_with(|| {
            labels.push(label);
            (labels.len() - 1) as u32
        })
    };

    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = index + 1;
        let trimmed = line.trim();
        if let Some(rest) = trimmed.strip_prefix(NODE_LABELS_DIRECTIVE) {
            for token in rest.split_whitespace() {
                let label = parse_label(token, lineno)?;
                intern(label, &mut labels);
            }
            continue;
        }
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected two integer tokens, got {trimmed:?}"),
            });
        };
        let a = parse_label(a, lineno)?;
        let b = parse_label(b, lineno)?;
        let u = intern(a, &mut labels);
        let v = intern(b, &mut labels);
        edges.push((u, v));
    }

    if labels.is_empty() {
        return Err(Error::NoEdges);
    }
    Graph::from_edges(labels, &edges)
}

fn parse_label(token: &str, line: usize) -> Result<u64> {
    token.parse::<u64>().map_err(|_| Error::Parse {
        line,
        message: format!("{token:?} is not a non-negative integer"),
    })
}

/// Writes `g` as an edge list in original labels, one `u v` line per edge
/// with `u < v`, sorted.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    let has_isolated = (0..g.node_count()).any(|u| g.degree(u) == 0);
    if has_isolated {
        write!(out, "{NODE_LABELS_DIRECTIVE}")?;
        for &label in g.labels() {
            write!(out, " {label}")?;
        }
        writeln!(out)?;
    }
    let mut lines: Vec<(u64, u64)> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (g.label(u as usize), g.label(v as usize));
            (a.min(b), a.max(b))
        })
        .collect();
    lines.sort_unstable();
    for (a, b) in lines {
        writeln!(out, "{a} {b}")?;
    }
    out.flush()?;
    Ok(())
}
