//! Edge random sampling: pick `m` edges uniformly and keep their endpoints.
//! Shows how the node count grows as more edges are drawn.

use netsample::experiment::load_dataset;
use netsample::sampling::edge_random_sample;
use netsample::{full_report, synthetic};

fn main() -> netsample::Result<()> {
    let g = match std::env::args_os().nth(1) {
        Some(path) => load_dataset(path.as_ref())?,
        None => synthetic::social_graph(4039, 88_234, 1)?,
    };
    println!(
        "{:>7} {:>6} {:>8} {:>8} {:>6}",
        "edges", "nodes", "avg_deg", "clust", "comps"
    );
    for step in 1..=7 {
        let m = (g.edge_count() * step / 8).max(1);
        let s = edge_random_sample(&g, m, 42)?;
        let r = full_report(&s, 42)?;
        println!(
            "{:>7} {:>6} {:>8.3} {:>8.4} {:>6}",
            s.edge_count(),
            s.node_count(),
            r.avg_degree,
            r.avg_clustering,
            r.connected_components
        );
    }
    Ok(())
}
