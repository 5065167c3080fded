use std::collections::VecDeque;

use crate::graph::{Graph, NodeId};

/// Connected components labelled densely in order of their smallest node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub labels: Vec<u32>,
    /// Nodes of the largest component, ascending. Ties go to the component
    /// with the smallest label.
    pub largest: Vec<NodeId>,
}

pub fn connected_components(g: &Graph) -> Components {
    let n = g.node_count();
    let mut labels = vec![u32::MAX; n];
    let mut sizes: Vec<usize> = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if labels[root] != u32::MAX {
            continue;
        }
        let label = sizes.len() as u32;
        labels[root] = label;
        queue.push_back(root as u32);
        let mut size = 0;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &v in g.neighbors(u as usize) {
                if labels[v as usize] == u32::MAX {
                    labels[v as usize] = label;
                    queue.push_back(v);
                }
            }
        }
        sizes.push(size);
    }

    let mut best = 0;
    for (label, &size) in sizes.iter().enumerate() {
        if size > sizes[best] {
            best = label;
        }
    }
    let largest = if n == 0 {
        Vec::new()
    } else {
        (0..n)
            .filter(|&u| labels[u] == best as u32)
            .map(NodeId::from)
            .collect()
    };
    Components {
        count: sizes.len(),
        labels,
        largest,
    }
}
