use rayon::prelude::*;

use crate::graph::Graph;

/// Unnormalized shortest-path betweenness of every node, counting each
/// unordered pair once (Brandes' dependency accumulation, one BFS per source).
///
/// Sources are processed in fixed blocks whose partial sums are added in block
/// order, so results are bit-identical at any thread count.
pub fn betweenness_centrality(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    if n == 0 {
        return Vec::new();
    }
    let block = n.div_ceil(256).max(64);
    let sources: Vec<u32> = (0..n as u32).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(block)
        .map(|chunk| {
            let mut acc = vec![0.0; n];
            let mut state = Brandes::new(n);
            for &s in chunk {
                state.accumulate(g, s, &mut acc);
            }
            acc
        })
        .collect();

    let mut scores = vec![0.0; n];
    for part in &partials {
        for (total, x) in scores.iter_mut().zip(part) {
            *total += x;
        }
    }
    // Each unordered pair was seen from both endpoints.
    for x in &mut scores {
        *x /= 2.0;
    }
    scores
}

struct Brandes {
    dist: Vec<u32>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<u32>,
}

impl Brandes {
    fn new(n: usize) -> Self {
        Brandes {
            dist: vec![u32::MAX; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
        }
    }

    fn accumulate(&mut self, g: &Graph, s: u32, acc: &mut [f64]) {
        for &u in &self.order {
            let u = u as usize;
            self.dist[u] = u32::MAX;
            self.sigma[u] = 0.0;
            self.delta[u] = 0.0;
        }
        self.order.clear();

        self.dist[s as usize] = 0;
        self.sigma[s as usize] = 1.0;
        self.order.push(s);
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head] as usize;
            head += 1;
            for &w in g.neighbors(v) {
                let w = w as usize;
                if self.dist[w] == u32::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    self.order.push(w as u32);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] += self.sigma[v];
                }
            }
        }

        for &w in self.order.iter().rev() {
            let w = w as usize;
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for &v in g.neighbors(w) {
                let v = v as usize;
                if self.dist[v] != u32::MAX && self.dist[v] + 1 == self.dist[w] {
                    self.delta[v] += self.sigma[v] * coeff;
                }
            }
            if w != s as usize {
                acc[w] += self.delta[w];
            }
        }
    }
}
