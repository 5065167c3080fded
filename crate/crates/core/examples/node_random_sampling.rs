//! Node random sampling: the subgraph induced by `k` uniformly chosen nodes.
//! Small samples shatter into many components; isolated picks are kept.

use netsample::experiment::load_dataset;
use netsample::sampling::node_random_sample;
use netsample::{full_report, synthetic};

fn main() -> netsample::Result<()> {
    let g = match std::env::args_os().nth(1) {
        Some(path) => load_dataset(path.as_ref())?,
        None => synthetic::social_graph(4039, 88_234, 1)?,
    };
    println!(
        "{:>6} {:>7} {:>8} {:>6} {:>6}",
        "nodes", "edges", "avg_deg", "comps", "diam"
    );
    for k in [100, 500, 1000, 2000, 3000] {
        let s = node_random_sample(&g, k.min(g.node_count()), 42)?;
        match full_report(&s, 42) {
            Ok(r) => println!(
                "{:>6} {:>7} {:>8.3} {:>6} {:>6}",
                s.node_count(),
                s.edge_count(),
                r.avg_degree,
                r.connected_components,
                r.diameter
            ),
            Err(e) => println!("{:>6} {:>7}  ({e})", s.node_count(), s.edge_count()),
        }
    }
    Ok(())
}
