//! Seeded graph generators for tests, examples, and stand-in datasets.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed;

pub fn path(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    Graph::from_unlabeled(n, &edges).expect("valid path")
}

/// Star with node 0 at the center.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..=leaves as u32).map(|v| (0, v)).collect();
    Graph::from_unlabeled(leaves + 1, &edges).expect("valid star")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    Graph::from_unlabeled(n, &edges).expect("valid clique")
}

/// Disjoint union of `copies` cliques of size `k`.
pub fn disjoint_cliques(copies: usize, k: usize) -> Graph {
    let mut edges = Vec::new();
    for c in 0..copies {
        let base = (c * k) as u32;
        for u in 0..k as u32 {
            for v in u + 1..k as u32 {
                edges.push((base + u, base + v));
            }
        }
    }
    Graph::from_unlabeled(copies * k, &edges).expect("valid cliques")
}

/// Uniform random graph with exactly `m` distinct edges on `n` nodes.
pub fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > max {
        return Err(Error::InvalidSpec(format!(
            "{m} edges do not fit in a simple graph on {n} nodes"
        )));
    }
    let mut rng = seed::rng(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.random_range(0..n as u32);
        let v = rng.random_range(0..n as u32);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            edges.push(key);
        }
    }
    Graph::from_unlabeled(n, &edges)
}

/// Connected community-structured graph with exactly `m` edges on `n` nodes.
///
/// Nodes are split into groups of 20 to 250 members. A random spanning tree
/// (group chains joined at random members) guarantees connectivity, then 90%
/// of the remaining edge budget is placed uniformly inside groups and the rest
/// uniformly between any two nodes. The result has the high clustering,
/// strong modularity, and short paths typical of friendship networks.
pub fn social_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if n < 2 || m < n - 1 || m > n * (n - 1) / 2 {
        return Err(Error::InvalidSpec(format!(
            "cannot build a connected simple graph with {n} nodes and {m} edges"
        )));
    }
    let mut rng = seed::rng(seed);
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.shuffle(&mut rng);

    let mut groups: Vec<&[u32]> = Vec::new();
    let mut rest: &[u32] = &order;
    while !rest.is_empty() {
        let size = rng.random_range(20..=250).min(rest.len());
        let (head, tail) = rest.split_at(size);
        groups.push(head);
        rest = tail;
    }

    let mut seen: HashSet<(u32, u32)> = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut add = |u: u32, v: u32, edges: &mut Vec<(u32, u32)>| -> bool {
        if u == v {
            return false;
        }
        let key = (u.min(v), u.max(v));
        if seen.insert(key) {
            edges.push(key);
            true
        } else {
            false
        }
    };

    for group in &groups {
        for pair in group.windows(2) {
            add(pair[0], pair[1], &mut edges);
        }
    }
    for g in 1..groups.len() {
        let prev = groups[rng.random_range(0..g)];
        let a = prev[rng.random_range(0..prev.len())];
        let b = groups[g][rng.random_range(0..groups[g].len())];
        add(a, b, &mut edges);
    }

    let intra_capacity: usize = groups.iter().map(|g| g.len() * (g.len() - 1) / 2).sum();
    let budget = m - edges.len();
    let intra_target = (edges.len() + budget * 9 / 10).min(intra_capacity);
    let weights: Vec<usize> = groups.iter().map(|g| g.len() * (g.len() - 1) / 2).collect();
    let total_weight: usize = weights.iter().sum();
    while edges.len() < intra_target {
        // Pick a group proportionally to its pair count, then a pair inside it.
        let mut ticket = rng.random_range(0..total_weight);
        let mut gi = 0;
        while ticket >= weights[gi] {
            ticket -= weights[gi];
            gi += 1;
        }
        let group = groups[gi];
        let u = group[rng.random_range(0..group.len())];
        let v = group[rng.random_range(0..group.len())];
        add(u, v, &mut edges);
    }
    while edges.len() < m {
        let u = rng.random_range(0..n as u32);
        let v = rng.random_range(0..n as u32);
        add(u, v, &mut edges);
    }
    Graph::from_unlabeled(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnm_has_exact_edge_count() {
        let g = gnm(30, 100, 7).unwrap();
        assert_eq!(g.node_count(), 30);
        assert_eq!(g.edge_count(), 100);
        assert!(gnm(4, 7, 1).is_err());
    }

    #[test]
    fn social_graph_is_exact_and_seeded() {
        let a = social_graph(600, 9000, 3).unwrap();
        let b = social_graph(600, 9000, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.node_count(), 600);
        assert_eq!(a.edge_count(), 9000);
        assert!((0..600).all(|u| a.degree(u) >= 1));
    }

    #[test]
    fn fixed_shapes() {
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(star(5).degree(0), 5);
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(disjoint_cliques(2, 3).edge_count(), 6);
    }
}
