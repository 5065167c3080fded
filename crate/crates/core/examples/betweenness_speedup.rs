//! Brandes betweenness on the full graph versus on a 500-node random-walk
//! sample, with wall-clock times.

use std::time::Instant;

use netsample::experiment::load_dataset;
use netsample::metrics::betweenness_centrality;
use netsample::sampling::random_walk_sample;
use netsample::synthetic;

fn main() -> netsample::Result<()> {
    let g = match std::env::args_os().nth(1) {
        Some(path) => load_dataset(path.as_ref())?,
        None => synthetic::social_graph(4039, 88_234, 1)?,
    };

    let start = Instant::now();
    let sample = random_walk_sample(&g, 500, 10_000, 10, 7)?;
    let sampling = start.elapsed();

    let start = Instant::now();
    let small = betweenness_centrality(&sample);
    let on_sample = start.elapsed();

    let start = Instant::now();
    let full = betweenness_centrality(&g);
    let on_full = start.elapsed();

    let top = |scores: &[f64]| scores.iter().copied().fold(0.0, f64::max);
    println!("sampling          {sampling:>10.2?}");
    println!(
        "sample ({:>4} n)   {on_sample:>10.2?}   max {:.1}",
        sample.node_count(),
        top(&small)
    );
    println!(
        "full   ({:>4} n)   {on_full:>10.2?}   max {:.1}",
        g.node_count(),
        top(&full)
    );
    println!(
        "speedup           {:>10.1}x",
        on_full.as_secs_f64() / on_sample.as_secs_f64()
    );
    Ok(())
}
