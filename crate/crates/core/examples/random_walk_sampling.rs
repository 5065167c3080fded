//! Random-walk sampling: ten walks of 10000 positions, then the subgraph
//! induced by the most visited nodes. Writes the 100-node sample to
//! `rw_sample.txt`.

use std::fs::File;
use std::io::BufWriter;

use netsample::experiment::load_dataset;
use netsample::sampling::{random_walk_sample, random_walk_visit_counts};
use netsample::{synthetic, write_edge_list};

fn main() -> netsample::Result<()> {
    let g = match std::env::args_os().nth(1) {
        Some(path) => load_dataset(path.as_ref())?,
        None => synthetic::social_graph(4039, 88_234, 1)?,
    };
    let counts = random_walk_visit_counts(&g, 10_000, 10, 7)?;
    println!(
        "{} positions over {} distinct nodes",
        counts.total(),
        counts.visited()
    );
    for (rank, id) in counts.top(5)?.into_iter().enumerate() {
        println!(
            "  #{} node {} visited {} times (degree {})",
            rank + 1,
            g.label(id.index()),
            counts.counts()[id.index()],
            g.degree(id.index())
        );
    }

    let mut edges = Vec::new();
    for seed in 0..10 {
        edges.push(random_walk_sample(&g, 100, 10_000, 10, seed)?.edge_count());
    }
    edges.sort_unstable();
    println!(
        "100-node samples over 10 seeds: edges {edges:?}, median {}",
        edges[5]
    );

    let sample = random_walk_sample(&g, 100, 10_000, 10, 7)?;
    write_edge_list(&sample, BufWriter::new(File::create("rw_sample.txt")?))?;
    println!(
        "wrote rw_sample.txt ({} nodes, {} edges)",
        sample.node_count(),
        sample.edge_count()
    );
    Ok(())
}
