use crate::error::{Error, Result};
use crate::graph::Graph;

/// Mean degree, `2|E| / |N|`. Zero for an empty graph.
pub fn average_degree(g: &Graph) -> f64 {
    if g.node_count() == 0 {
        return 0.0;
    }
    2.0 * g.edge_count() as f64 / g.node_count() as f64
}

/// Fraction of possible undirected edges present, `2|E| / (|N|(|N|-1))`.
pub fn density(g: &Graph) -> Result<f64> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::DensityUndefined);
    }
    Ok(2.0 * g.edge_count() as f64 / (n as f64 * (n - 1) as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthetic;

    #[test]
    fn small_graphs() {
        assert_eq!(average_degree(&synthetic::complete(3)), 2.0);
        assert_eq!(average_degree(&synthetic::path(4)), 1.5);
        assert_eq!(density(&synthetic::complete(4)).unwrap(), 1.0);
        assert_eq!(density(&synthetic::path(2)).unwrap(), 1.0);
        let lonely = Graph::from_edges(vec![0], &[]).unwrap().0;
        assert!(matches!(density(&lonely), Err(Error::DensityUndefined)));
        assert_eq!(average_degree(&lonely), 0.0);
    }
}
