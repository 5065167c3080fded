use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::metrics::components::connected_components;

/// Sources handed to one worker at a time in all-pairs loops. Fixed so the
/// work split never depends on the thread count.
pub(crate) const SOURCE_BLOCK: usize = 64;

/// Exact BFS hop distances from `source`; `None` where unreachable.
pub fn distances_from(g: &Graph, source: NodeId) -> Result<Vec<Option<u32>>> {
    if !g.contains(source) {
        return Err(Error::UnknownNode(source.0));
    }
    let mut bfs = Bfs::new(g.node_count());
    bfs.run(g, source.0);
    Ok(bfs
        .dist
        .iter()
        .map(|&d| (d != u32::MAX).then_some(d))
        .collect())
}

/// Reusable BFS buffers.
pub(crate) struct Bfs {
    pub dist: Vec<u32>,
    pub order: Vec<u32>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Bfs {
            dist: vec![u32::MAX; n],
            order: Vec::with_capacity(n),
        }
    }

    /// Fills `dist` for everything reachable from `source`; `order` holds the
    /// reached nodes in visiting order.
    pub fn run(&mut self, g: &Graph, source: u32) {
        for &u in &self.order {
            self.dist[u as usize] = u32::MAX;
        }
        self.order.clear();
        self.dist[source as usize] = 0;
        self.order.push(source);
        let mut head = 0;
        while head < self.order.len() {
            let u = self.order[head];
            head += 1;
            let next = self.dist[u as usize] + 1;
            for &v in g.neighbors(u as usize) {
                if self.dist[v as usize] == u32::MAX {
                    self.dist[v as usize] = next;
                    self.order.push(v);
                }
            }
        }
    }
}

/// Diameter and mean shortest-path length of the largest component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathSummary {
    pub diameter: u32,
    pub avg_path_length: f64,
    /// Size of the component both values were measured on.
    pub component_nodes: usize,
}

/// Longest and mean BFS distance over ordered pairs `u != v` of the largest
/// connected component.
pub fn diameter_and_apl(g: &Graph) -> Result<PathSummary> {
    let comps = connected_components(g);
    let sources = comps.largest;
    if sources.len() < 2 {
        return Err(Error::NoMeasurableComponent);
    }
    let n = g.node_count();
    let (diameter, total) = sources
        .par_chunks(SOURCE_BLOCK)
        .map(|block| {
            let mut bfs = Bfs::new(n);
            let mut far = 0u32;
            let mut sum = 0u64;
            for &s in block {
                bfs.run(g, s.0);
                for &u in &bfs.order {
                    let d = bfs.dist[u as usize];
                    far = far.max(d);
                    sum += d as u64;
                }
            }
            (far, sum)
        })
        .reduce(|| (0, 0), |a, b| (a.0.max(b.0), a.1 + b.1));
    let c = sources.len() as u64;
    Ok(PathSummary {
        diameter,
        avg_path_length: total as f64 / (c * (c - 1)) as f64,
        component_nodes: sources.len(),
    })
}
