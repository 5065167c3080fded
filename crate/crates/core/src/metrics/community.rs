//! Modularity and Louvain community detection.

use std::io::Write;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed;

/// Smallest modularity improvement that still counts as progress.
pub const LOUVAIN_MIN_GAIN: f64 = 1e-7;

/// Community label per node, dense in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    labels: Vec<u32>,
    count: usize,
}

impl Partition {
    /// Relabels arbitrary community ids densely (first appearance gets 0).
    pub fn from_labels<L: Copy + Eq + std::hash::Hash>(raw: &[L]) -> Partition {
        let mut seen = std::collections::HashMap::new();
        let labels = raw
            .iter()
            .map(|l| {
                let next = seen.len() as u32;
                *seen.entry(*l).or_insert(next)
            })
            .collect();
        Partition {
            labels,
            count: seen.len(),
        }
    }

    pub fn single(n: usize) -> Partition {
        Partition {
            labels: vec![0; n],
            count: usize::from(n > 0),
        }
    }

    pub fn singletons(n: usize) -> Partition {
        Partition {
            labels: (0..n as u32).collect(),
            count: n,
        }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn community_count(&self) -> usize {
        self.count
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// CSV with header `node_label,community_id`, one row per node.
    pub fn write_csv<W: Write>(&self, g: &Graph, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["node_label", "community_id"])?;
        for (u, &c) in self.labels.iter().enumerate() {
            w.write_record([g.label(u).to_string(), c.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `Q = sum_c [ e_c / |E| - (d_c / 2|E|)^2 ]` with `e_c` the edges inside
/// community `c` and `d_c` its total degree.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    if p.len() != g.node_count() {
        return Err(Error::MissingLabel {
            labelled: p.len(),
            nodes: g.node_count(),
        });
    }
    if g.edge_count() == 0 {
        return Err(Error::ModularityUndefined);
    }
    let mut inside = vec![0u64; p.community_count()];
    let mut degree = vec![0u64; p.community_count()];
    for u in 0..g.node_count() {
        degree[p.labels[u] as usize] += g.degree(u) as u64;
    }
    for (u, v) in g.edges() {
        let c = p.labels[u as usize];
        if c == p.labels[v as usize] {
            inside[c as usize] += 1;
        }
    }
    let m = g.edge_count() as f64;
    let covered: f64 = inside.iter().map(|&e| e as f64 / m).sum();
    let expected: f64 = degree
        .iter()
        .map(|&d| {
            let f = d as f64 / (2.0 * m);
            f * f
        })
        .sum();
    Ok(covered - expected)
}

/// Weighted graph used between Louvain levels. Self-loop weight holds the
/// edges folded inside a super-node, each counted once.
struct Level {
    adj: Vec<Vec<(u32, f64)>>,
    self_weight: Vec<f64>,
}

impl Level {
    fn from_graph(g: &Graph) -> Level {
        Level {
            adj: (0..g.node_count())
                .map(|u| g.neighbors(u).iter().map(|&v| (v, 1.0)).collect())
                .collect(),
            self_weight: vec![0.0; g.node_count()],
        }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn strength(&self, u: usize) -> f64 {
        self.adj[u].iter().map(|&(_, w)| w).sum::<f64>() + 2.0 * self.self_weight[u]
    }

    /// One round of local moves. Returns dense community ids and whether any
    /// node changed community.
    fn local_moves(&self, two_m: f64, rng: &mut impl rand::Rng) -> (Vec<u32>, bool) {
        let n = self.len();
        let strength: Vec<f64> = (0..n).map(|u| self.strength(u)).collect();
        let mut comm: Vec<u32> = (0..n as u32).collect();
        let mut total = strength.clone();
        let mut link = vec![0.0f64; n];
        let mut touched: Vec<u32> = Vec::new();
        let mut order: Vec<usize> = (0..n).collect();
        let mut any_move = false;

        loop {
            order.shuffle(rng);
            let mut moved = false;
            for &u in &order {
                let own = comm[u];
                let k = strength[u];
                for &(v, w) in &self.adj[u] {
                    let c = comm[v as usize];
                    if link[c as usize] == 0.0 {
                        touched.push(c);
                    }
                    link[c as usize] += w;
                }
                total[own as usize] -= k;

                // Gain of joining c, up to the common factor 1/m:
                // link(u, c) - total(c) * k / 2m
                let stay = link[own as usize] - total[own as usize] * k / two_m;
                let mut best = own;
                let mut best_gain = stay;
                for &c in &touched {
                    let gain = link[c as usize] - total[c as usize] * k / two_m;
                    if gain > best_gain {
                        best = c;
                        best_gain = gain;
                    }
                }
                // Gains are scaled by m relative to modularity.
                if best != own && (best_gain - stay) * 2.0 / two_m <= LOUVAIN_MIN_GAIN {
                    best = own;
                }
                total[best as usize] += k;
                if best != own {
                    comm[u] = best;
                    moved = true;
                }
                for &c in &touched {
                    link[c as usize] = 0.0;
                }
                touched.clear();
            }
            if !moved {
                break;
            }
            any_move = true;
        }

        let dense = Partition::from_labels(&comm);
        (dense.labels, any_move)
    }

    fn aggregate(&self, comm: &[u32], count: usize) -> Level {
        let mut self_weight = vec![0.0; count];
        let mut pending: Vec<Vec<(u32, f64)>> = vec![Vec::new(); count];
        for u in 0..self.len() {
            let cu = comm[u];
            self_weight[cu as usize] += self.self_weight[u];
            for &(v, w) in &self.adj[u] {
                let cv = comm[v as usize];
                if cu == cv {
                    // Seen once from each endpoint.
                    self_weight[cu as usize] += w / 2.0;
                } else {
                    pending[cu as usize].push((cv, w));
                }
            }
        }
        let adj = pending
            .into_iter()
            .map(|mut row| {
                row.sort_by_key(|&(v, _)| v);
                let mut merged: Vec<(u32, f64)> = Vec::with_capacity(row.len());
                for (v, w) in row {
                    match merged.last_mut() {
                        Some(last) if last.0 == v => last.1 += w,
                        _ => merged.push((v, w)),
                    }
                }
                merged
            })
            .collect();
        Level { adj, self_weight }
    }
}

/// Greedy multi-level modularity maximization (Louvain).
///
/// Each level repeatedly moves single nodes to the neighboring community with
/// the largest modularity gain, visiting nodes in a seeded random order, until
/// no move gains more than [`LOUVAIN_MIN_GAIN`]. Communities are then
/// collapsed into super-nodes and the process repeats until a level makes no
/// move.
pub fn louvain_communities(g: &Graph, seed: u64) -> Result<Partition> {
    if g.edge_count() == 0 {
        return Err(Error::ModularityUndefined);
    }
    let mut rng = seed::rng(seed);
    let two_m = 2.0 * g.edge_count() as f64;
    let mut membership: Vec<u32> = (0..g.node_count() as u32).collect();
    let mut level = Level::from_graph(g);

    loop {
        let (comm, moved) = level.local_moves(two_m, &mut rng);
        if !moved {
            break;
        }
        let count = comm.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        for m in &mut membership {
            *m = comm[*m as usize];
        }
        if count == level.len() {
            break;
        }
        level = level.aggregate(&comm, count);
    }
    Ok(Partition::from_labels(&membership))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthetic;

    #[test]
    fn closed_forms() {
        let two = synthetic::disjoint_cliques(2, 3);
        let natural = Partition::from_labels(&[0, 0, 0, 1, 1, 1]);
        assert_eq!(modularity(&two, &natural).unwrap(), 0.5);
        assert_eq!(modularity(&two, &Partition::single(6)).unwrap(), 0.0);

        let tri = synthetic::complete(3);
        let q = modularity(&tri, &Partition::singletons(3)).unwrap();
        assert!((q + 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn relabeling_does_not_change_q() {
        let g = synthetic::gnm(12, 25, 3).unwrap();
        let a = Partition::from_labels(&[0, 0, 1, 1, 2, 2, 0, 1, 2, 0, 1, 2]);
        let b = Partition::from_labels(&[7, 7, 3, 3, 9, 9, 7, 3, 9, 7, 3, 9]);
        assert_eq!(modularity(&g, &a).unwrap(), modularity(&g, &b).unwrap());
    }

    #[test]
    fn errors() {
        let g = synthetic::path(3);
        assert!(matches!(
            modularity(&g, &Partition::single(2)),
            Err(Error::MissingLabel { .. })
        ));
        let empty = Graph::from_unlabeled(3, &[]).unwrap();
        assert!(matches!(
            modularity(&empty, &Partition::single(3)),
            Err(Error::ModularityUndefined)
        ));
        assert!(matches!(
            louvain_communities(&empty, 0),
            Err(Error::ModularityUndefined)
        ));
    }

    #[test]
    fn louvain_separates_two_triangles() {
        let g = synthetic::disjoint_cliques(2, 3);
        for seed in 0..20 {
            let p = louvain_communities(&g, seed).unwrap();
            assert_eq!(p.labels(), &[0, 0, 0, 1, 1, 1], "seed {seed}");
        }
    }

    #[test]
    fn louvain_keeps_clique_whole() {
        for seed in 0..20 {
            let p = louvain_communities(&synthetic::complete(4), seed).unwrap();
            assert_eq!(p.community_count(), 1, "seed {seed}");
        }
    }

    #[test]
    fn louvain_finds_planted_groups() {
        let g = synthetic::social_graph(800, 12_000, 5).unwrap();
        let p = louvain_communities(&g, 1).unwrap();
        assert!(modularity(&g, &p).unwrap() > 0.5);
    }

    #[test]
    fn partition_csv() {
        let (g, _) = crate::graph::parse_edge_list("10 20\n30 40\n".as_bytes()).unwrap();
        let p = Partition::from_labels(&[0, 0, 1, 1]);
        let mut buf = Vec::new();
        p.write_csv(&g, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "node_label,community_id\n10,0\n20,0\n30,1\n40,1\n"
        );
    }
}
