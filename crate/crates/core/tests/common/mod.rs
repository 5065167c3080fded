#![allow(dead_code, clippy::needless_range_loop)]

use netsample::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi style graph with `n` nodes and edge probability `p`, plus the
/// raw pair list it was built from (u < v).
pub fn random_graph(n: usize, p: f64, seed: u64) -> (Graph, Vec<(u32, u32)>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    (Graph::from_unlabeled(n, &edges).unwrap(), edges)
}

/// Random instance sizes for oracle sweeps: `(n, p, seed)`.
pub fn instances(count: usize, max_nodes: usize, seed: u64) -> Vec<(usize, f64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.random_range(2..=max_nodes);
            let p = rng.random_range(0.02..0.5);
            (n, p, seed ^ ((i as u64 + 1) * 0x9E37_79B9))
        })
        .collect()
}

/// All-pairs hop distances by Floyd–Warshall; `u32::MAX` marks unreachable.
pub fn floyd_warshall(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    const INF: u32 = u32::MAX;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u as usize][v as usize] = 1;
        d[v as usize][u as usize] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Workspace-relative location of the ego-Facebook edge list, or the
/// `EGO_FACEBOOK` override.
pub fn dataset_path() -> Option<std::path::PathBuf> {
    if let Some(p) = std::env::var_os("EGO_FACEBOOK") {
        return Some(p.into());
    }
    let p =
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/facebook_combined.txt");
    p.is_file().then_some(p)
}

/// Edge set of a node sample rebuilt from scratch: every ordered pair of
/// distinct chosen labels (the k·(k−1) permutations) intersected with the
/// source edge set, folded to unordered `(min, max)` label pairs.
pub fn permutation_intersection(
    g: &Graph,
    chosen: &[u64],
) -> std::collections::BTreeSet<(u64, u64)> {
    let source: std::collections::HashSet<(u64, u64)> = g
        .edges()
        .flat_map(|(u, v)| {
            let (a, b) = (g.label(u as usize), g.label(v as usize));
            [(a, b), (b, a)]
        })
        .collect();
    let mut out = std::collections::BTreeSet::new();
    for &a in chosen {
        for &b in chosen {
            if a != b && source.contains(&(a, b)) {
                out.insert((a.min(b), a.max(b)));
            }
        }
    }
    out
}

/// Unordered label pairs of `g`'s edges.
pub fn label_edges(g: &Graph) -> std::collections::BTreeSet<(u64, u64)> {
    g.edges()
        .map(|(u, v)| {
            let (a, b) = (g.label(u as usize), g.label(v as usize));
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Betweenness by explicit path counting over the Floyd–Warshall matrix:
/// for every unordered pair `{s, t}`, `v` receives `σ(s,v)·σ(v,t)/σ(s,t)`
/// whenever `d(s,v) + d(v,t) = d(s,t)`.
pub fn naive_betweenness(n: usize, edges: &[(u32, u32)]) -> Vec<f64> {
    const INF: u32 = u32::MAX;
    let d = floyd_warshall(n, edges);
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u as usize].push(v as usize);
        adj[v as usize].push(u as usize);
    }
    // σ[s][t]: number of shortest s–t paths, filled in order of distance.
    let mut sigma = vec![vec![0f64; n]; n];
    for s in 0..n {
        let mut order: Vec<usize> = (0..n).filter(|&t| d[s][t] != INF).collect();
        order.sort_by_key(|&t| d[s][t]);
        sigma[s][s] = 1.0;
        for &t in order.iter().skip(1) {
            sigma[s][t] = adj[t]
                .iter()
                .filter(|&&u| d[s][u] != INF && d[s][u] + 1 == d[s][t])
                .map(|&u| sigma[s][u])
                .sum();
        }
    }
    let mut bc = vec![0f64; n];
    for s in 0..n {
        for t in s + 1..n {
            if d[s][t] == INF {
                continue;
            }
            for v in 0..n {
                if v != s
                    && v != t
                    && d[s][v] != INF
                    && d[v][t] != INF
                    && d[s][v] + d[v][t] == d[s][t]
                {
                    bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
                }
            }
        }
    }
    bc
}

/// Modularity straight from the definition,
/// `Q = (1/2m) Σ_ij [A_ij − k_i k_j / 2m] δ(c_i, c_j)`.
pub fn naive_modularity(g: &Graph, labels: &[u32]) -> f64 {
    let n = g.node_count();
    let two_m = 2.0 * g.edge_count() as f64;
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if labels[i] == labels[j] {
                let a = if g.has_edge(i, j) { 1.0 } else { 0.0 };
                q += a - (g.degree(i) * g.degree(j)) as f64 / two_m;
            }
        }
    }
    q / two_m
}

/// Every set partition of `0..n` as restricted-growth label vectors.
pub fn all_partitions(n: usize) -> Vec<Vec<u32>> {
    fn grow(prefix: &mut Vec<u32>, n: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for c in 0..=next {
            prefix.push(c);
            grow(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), n, &mut out);
    out
}
