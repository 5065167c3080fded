//! Load an edge list (or build the synthetic stand-in) and print its
//! property report.
//!
//! ```text
//! cargo run --release --example load_and_describe -- data/facebook_combined.txt
//! ```

use std::time::Instant;

use netsample::experiment::load_dataset;
use netsample::metrics::{average_clustering_all_nodes, connected_components};
use netsample::{full_report, synthetic, Graph};

fn graph_from_args() -> netsample::Result<Graph> {
    match std::env::args_os().nth(1) {
        Some(path) => load_dataset(path.as_ref()),
        None => {
            eprintln!("no dataset given; using a 4039-node synthetic social graph");
            synthetic::social_graph(4039, 88_234, 1)
        }
    }
}

fn main() -> netsample::Result<()> {
    let g = graph_from_args()?;
    println!("nodes {}  edges {}", g.node_count(), g.edge_count());

    let start = Instant::now();
    let report = full_report(&g, 0)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    println!("measured in {:.2?}", start.elapsed());

    let components = connected_components(&g);
    println!(
        "largest component {} of {} nodes; clustering over all nodes {:.4}",
        components.largest.len(),
        g.node_count(),
        average_clustering_all_nodes(&g)
    );
    Ok(())
}
