use rayon::prelude::*;

use crate::graph::Graph;

/// Triangles through each node, by merge-intersecting sorted neighbor lists.
pub fn triangles_per_node(g: &Graph) -> Vec<u64> {
    (0..g.node_count())
        .into_par_iter()
        .map(|v| {
            let nv = g.neighbors(v);
            let shared: u64 = nv
                .iter()
                .map(|&u| sorted_intersection_len(nv, g.neighbors(u as usize)) as u64)
                .sum();
            shared / 2
        })
        .collect()
}

fn sorted_intersection_len(a: &[u32], b: &[u32]) -> usize {
    let (mut i, mut j, mut hits) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                hits += 1;
                i += 1;
                j += 1;
            }
        }
    }
    hits
}

/// Local clustering coefficient per node; `0` for nodes of degree below 2.
pub fn local_clustering(g: &Graph) -> Vec<f64> {
    triangles_per_node(g)
        .into_iter()
        .enumerate()
        .map(|(v, t)| {
            let d = g.degree(v) as f64;
            if d < 2.0 {
                0.0
            } else {
                2.0 * t as f64 / (d * (d - 1.0))
            }
        })
        .collect()
}

/// Mean local clustering over nodes of degree at least 2.
///
/// Nodes with fewer than two neighbors have no neighbor pairs and are left
/// out of the mean. Returns 0 when no node qualifies.
pub fn average_clustering(g: &Graph) -> f64 {
    let local = local_clustering(g);
    let (sum, count) = (0..g.node_count())
        .filter(|&v| g.degree(v) >= 2)
        .fold((0.0, 0usize), |(s, c), v| (s + local[v], c + 1));
    if count == 0 {
        0.0
    } else {
        sum / count as f64
    }
}

/// Mean local clustering over all nodes, counting low-degree nodes as 0.
pub fn average_clustering_all_nodes(g: &Graph) -> f64 {
    if g.node_count() == 0 {
        return 0.0;
    }
    local_clustering(g).iter().sum::<f64>() / g.node_count() as f64
}
