//! A small sweep of one strategy: several sizes, repeated draws, mean and
//! spread of every property. Output goes to `sweep_<strategy>/`.
//!
//! ```text
//! cargo run --release --example property_sweep -- nrs [DATASET]
//! ```

use std::path::Path;

use netsample::experiment::load_dataset;
use netsample::experiment::{reference_plan, run_sweep_on, write_sweep_dir, ExperimentPlan};
use netsample::{synthetic, Strategy};

fn main() -> netsample::Result<()> {
    let mut args = std::env::args().skip(1);
    let strategy: Strategy = args.next().as_deref().unwrap_or("rw").parse()?;
    let g = match args.next() {
        Some(path) => load_dataset(Path::new(&path))?,
        None => synthetic::social_graph(4039, 88_234, 1)?,
    };
    let sizes = match strategy {
        Strategy::Ers => vec![10_000, 30_000, 50_000, 70_000],
        _ => vec![100, 500, 1500, 3000],
    };
    let plan = ExperimentPlan {
        sizes: sizes.into_iter().filter(|&s| s <= g.edge_count()).collect(),
        repetitions: 3,
        ..reference_plan(strategy)
    };
    let result = run_sweep_on(&g, &plan)?;

    println!(
        "{:>7} {:>10} {:>10} {:>10} {:>10}",
        "size", "avg_deg", "clust", "apl", "comps"
    );
    for cell in &result.cells {
        let mean = |name| cell.aggregate.property(name).map_or(f64::NAN, |s| s.mean);
        println!(
            "{:>7} {:>10.3} {:>10.4} {:>10.3} {:>10.1}",
            cell.size,
            mean("avg_degree"),
            mean("avg_clustering"),
            mean("avg_path_length"),
            mean("connected_components")
        );
    }
    let dir = format!("sweep_{strategy}");
    write_sweep_dir(&result, Path::new(&dir))?;
    println!("wrote {dir}/");
    Ok(())
}
