//! Exit criteria, one line each. Run with
//! `cargo test --release --test acceptance -- --nocapture` or plain
//! `cargo test`. Dataset-bound checks read `EGO_FACEBOOK` or
//! `data/facebook_combined.txt` at the workspace root and fail as blocked
//! when neither exists. The remaining checks fall back to a synthetic graph
//! of the same size.

#![allow(clippy::needless_range_loop)]

mod common;

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use netsample::experiment::{load_dataset, replicate, Replication};
use netsample::metrics::{betweenness_centrality, distances_from, modularity, Partition};
use netsample::sampling::{node_random_sample, random_walk_sample};
use netsample::{full_report, synthetic, Graph, NodeId, Strategy};

const NODES: usize = 4039;
const EDGES: usize = 88_234;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }

    fn blocked(what: &str) -> Self {
        Outcome::new(
            false,
            format!("blocked: {what} needs the ego-Facebook edge list (set EGO_FACEBOOK or add data/facebook_combined.txt)"),
        )
    }
}

fn within(value: f64, target: f64, tol: f64) -> bool {
    (value - target).abs() <= tol
}

fn baseline_reproduction(dataset: Option<&Graph>) -> Outcome {
    let Some(g) = dataset else {
        return Outcome::blocked("baseline reproduction");
    };
    let start = Instant::now();
    let r = match netsample::with_workers(1, || full_report(g, 0)).unwrap() {
        Ok(r) => r,
        Err(e) => return Outcome::new(false, format!("full_report failed: {e}")),
    };
    let elapsed = start.elapsed();
    let checks = [
        ("nodes", g.node_count() == NODES),
        ("edges", g.edge_count() == EDGES),
        ("avg_degree", within(r.avg_degree, 43.691, 0.001)),
        ("density", within(r.density, 0.0108, 0.0005)),
        ("diameter", r.diameter == 8),
        ("avg_path_length", within(r.avg_path_length, 3.693, 0.005)),
        ("connected_components", r.connected_components == 1),
        ("avg_clustering", within(r.avg_clustering, 0.617, 0.005)),
        ("modularity", r.modularity >= 0.80),
        ("runtime", elapsed < Duration::from_secs(120)),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Outcome::new(
        failed.is_empty(),
        format!(
            "N={} E={} deg={:.4} dens={:.5} diam={} apl={:.4} cc={} clust={:.4} Q={:.4} in {:.1?}{}",
            g.node_count(),
            g.edge_count(),
            r.avg_degree,
            r.density,
            r.diameter,
            r.avg_path_length,
            r.connected_components,
            r.avg_clustering,
            r.modularity,
            elapsed,
            if failed.is_empty() { String::new() } else { format!("; off: {failed:?}") }
        ),
    )
}

fn ers_exactness(study: Option<&Replication>) -> Outcome {
    let Some(study) = study else {
        return Outcome::blocked("the ERS sweep check");
    };
    let ers = &study.sweeps[0];
    assert_eq!(ers.strategy(), Strategy::Ers);
    let mut exact = true;
    let mut means = Vec::new();
    for cell in &ers.cells {
        exact &= cell.repetitions.len() == ers.plan.repetitions
            && cell
                .repetitions
                .iter()
                .all(|r| r.sample.is_some_and(|s| s.edges == cell.size));
        means.push(cell.aggregate.sample_nodes.map_or(f64::NAN, |s| s.mean));
    }
    let monotone = means.windows(2).all(|w| w[1] >= w[0]);
    Outcome::new(
        exact && monotone && ers.cells.len() == 7,
        format!(
            "sizes {:?}; exact edge counts {exact}; mean nodes {:?}",
            ers.plan.sizes,
            means.iter().map(|m| format!("{m:.1}")).collect::<Vec<_>>()
        ),
    )
}

fn rw_band(dataset: Option<&Graph>) -> Outcome {
    let Some(g) = dataset else {
        return Outcome::blocked("the 100-node walk band");
    };
    let mut edges = Vec::new();
    let mut all_hundred = true;
    for seed in 0..10 {
        match random_walk_sample(g, 100, 10_000, 10, seed) {
            Ok(s) => {
                all_hundred &= s.node_count() == 100;
                edges.push(s.edge_count());
            }
            Err(e) => return Outcome::new(false, format!("seed {seed}: {e}")),
        }
    }
    edges.sort_unstable();
    let median = (edges[4] + edges[5]) as f64 / 2.0;
    Outcome::new(
        all_hundred && (1000.0..=4000.0).contains(&median),
        format!("edges over seeds 0..10: {edges:?}; median {median}"),
    )
}

fn oracle_suites() -> Outcome {
    // (a) BFS against Floyd–Warshall.
    let mut mismatches = 0usize;
    for (n, p, seed) in common::instances(200, 60, 0xA) {
        let (g, edges) = common::random_graph(n, p, seed);
        let fw = common::floyd_warshall(n, &edges);
        for s in 0..n {
            let d = distances_from(&g, NodeId::from(s)).unwrap();
            for t in 0..n {
                mismatches += usize::from(d[t] != (fw[s][t] != u32::MAX).then_some(fw[s][t]));
            }
        }
    }

    // (b) Brandes against explicit path counting.
    let mut worst = 0f64;
    for (n, p, seed) in common::instances(100, 30, 0xB) {
        let (g, edges) = common::random_graph(n, p, seed);
        let fast = betweenness_centrality(&g);
        let slow = common::naive_betweenness(n, &edges);
        for (a, b) in fast.iter().zip(&slow) {
            worst = worst.max((a - b).abs());
        }
    }

    // (c) NRS against the permutation-intersection construction.
    let mut nrs_diffs = 0usize;
    for (i, (n, p, seed)) in common::instances(100, 40, 0xC).into_iter().enumerate() {
        let (g, _) = common::random_graph(n, p, seed);
        let k = 1 + (i * 7) % n;
        let s = node_random_sample(&g, k, seed).unwrap();
        let ok = s.node_count() == k
            && common::label_edges(&s) == common::permutation_intersection(&g, s.labels());
        nrs_diffs += usize::from(!ok);
    }

    // (d) Closed-form modularity.
    let two_k3 = synthetic::disjoint_cliques(2, 3);
    let natural = modularity(&two_k3, &Partition::from_labels(&[0, 0, 0, 1, 1, 1])).unwrap();
    let single = modularity(&two_k3, &Partition::single(6)).unwrap();

    Outcome::new(
        mismatches == 0 && worst <= 1e-9 && nrs_diffs == 0 && natural == 0.5 && single == 0.0,
        format!(
            "(a) {mismatches} distance mismatches; (b) max err {worst:.2e}; (c) {nrs_diffs} NRS diffs; (d) Q two-K3 {natural}, single {single}"
        ),
    )
}

fn csv_bytes(dir: &Path) -> Vec<Vec<u8>> {
    ["ers", "nrs", "rw"]
        .iter()
        .map(|s| fs::read(dir.join(s).join("results.csv")).expect("results.csv"))
        .collect()
}

fn determinism(runs: &[(usize, Vec<Vec<u8>>)], label: &str) -> Outcome {
    let identical = runs.windows(2).all(|w| w[0].1 == w[1].1);
    let sizes: Vec<usize> = runs[0].1.iter().map(Vec::len).collect();
    Outcome::new(
        identical,
        format!(
            "{label}: results.csv for ers/nrs/rw ({sizes:?} bytes) across workers {:?}",
            runs.iter().map(|r| r.0).collect::<Vec<_>>()
        ),
    )
}

/// Gap comparison at the largest node-count target shared by NRS and RW, and
/// at the final edge target for ERS.
fn trend_check(study: &Replication, label: &str) -> (usize, usize, String) {
    let [ers, nrs, rw] = [&study.sweeps[0], &study.sweeps[1], &study.sweeps[2]];
    let common = *nrs
        .plan
        .sizes
        .iter()
        .filter(|s| rw.plan.sizes.contains(s))
        .max()
        .expect("shared size");
    let mean = |sweep: &netsample::experiment::SweepResult, size: Option<usize>, prop: &str| {
        let cell = match size {
            Some(size) => sweep.cells.iter().find(|c| c.size == size),
            None => sweep.cells.last(),
        };
        cell.and_then(|c| c.aggregate.property(prop))
            .map_or(f64::NAN, |s| s.mean)
    };
    let rw_better = [
        "avg_clustering",
        "diameter",
        "avg_path_length",
        "connected_components",
    ];
    let others_better = ["avg_degree", "density", "modularity"];
    let mut held = 0;
    let mut lines = Vec::new();
    for prop in rw_better.iter().chain(&others_better) {
        let base = study.baseline.get(prop).unwrap();
        let gap_e = (mean(ers, None, prop) - base).abs();
        let gap_n = (mean(nrs, Some(common), prop) - base).abs();
        let gap_r = (mean(rw, Some(common), prop) - base).abs();
        let ok = if rw_better.contains(prop) {
            gap_r < gap_e && gap_r < gap_n
        } else {
            gap_e < gap_r || gap_n < gap_r
        };
        held += usize::from(ok);
        lines.push(format!(
            "      {prop:<21} ers {gap_e:.4}  nrs {gap_n:.4}  rw {gap_r:.4}  {}",
            if ok { "as expected" } else { "differs" }
        ));
    }
    (
        held,
        rw_better.len() + others_better.len(),
        format!(
            "{label}, nrs/rw at {common} nodes, ers at {} edges\n{}",
            ers.plan.sizes.last().unwrap(),
            lines.join("\n")
        ),
    )
}

fn speedup(g: &Graph, label: &str) -> Outcome {
    let sample = match random_walk_sample(g, 500, 10_000, 10, 0) {
        Ok(s) => s,
        Err(e) => return Outcome::new(false, format!("sampling failed: {e}")),
    };
    let start = Instant::now();
    let small = betweenness_centrality(&sample);
    let t_sample = start.elapsed();
    let start = Instant::now();
    let full = betweenness_centrality(g);
    let t_full = start.elapsed();
    assert_eq!((small.len(), full.len()), (500, g.node_count()));
    let factor = t_full.as_secs_f64() / t_sample.as_secs_f64().max(1e-9);
    Outcome::new(
        factor >= 5.0,
        format!(
            "{label}: full {t_full:.2?} vs 500-node sample {t_sample:.2?} = {factor:.1}x ({} the 20x target)",
            if factor >= 20.0 { "meets" } else { "below" }
        ),
    )
}

fn main() {
    let path = common::dataset_path();
    let dataset = path.as_ref().and_then(|p| match load_dataset(p) {
        Ok(g) => Some(g),
        Err(e) => {
            eprintln!("could not load {}: {e}", p.display());
            None
        }
    });
    let (work_graph, label) = match &dataset {
        Some(g) => (g.clone(), path.unwrap().display().to_string()),
        None => (
            synthetic::social_graph(NODES, EDGES, 1).unwrap(),
            "synthetic 4039/88234 stand-in".to_string(),
        ),
    };
    let label = label.as_str();

    // Reference sweeps of all three strategies, twice on one worker and once
    // on eight. The stand-in runs 3 repetitions per cell to bound runtime.
    let repetitions = if dataset.is_some() { 10 } else { 3 };
    let scratch = tempfile::tempdir().unwrap();
    let mut runs = Vec::new();
    let mut first = None;
    for (i, workers) in [1usize, 1, 8].into_iter().enumerate() {
        let dir = scratch.path().join(format!("run{i}"));
        let study = netsample::with_workers(workers, || {
            replicate(&work_graph, Path::new(label), 0, repetitions, &dir)
        })
        .unwrap()
        .expect("replicate");
        runs.push((workers, csv_bytes(&dir)));
        first.get_or_insert(study);
    }
    let study = first.unwrap();
    let dataset_study = dataset.as_ref().map(|_| &study);

    let results = [
        (
            "1 dataset baseline reproduction",
            baseline_reproduction(dataset.as_ref()),
        ),
        (
            "2 ERS exactness over the edge sweep",
            ers_exactness(dataset_study),
        ),
        ("3 RW 100-node edge band", rw_band(dataset.as_ref())),
        ("4 oracle equivalence suites", oracle_suites()),
        ("5 replicate determinism", determinism(&runs, label)),
        (
            "7 betweenness speedup on a 500-node sample",
            speedup(&work_graph, label),
        ),
    ];

    let (held, total, trends) = trend_check(&study, label);
    println!();
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        if i == 5 {
            println!(
                "[{}] 6 property trends (soft, not gating): {held}/{total} expectations hold on {trends}",
                if held == total { "PASS" } else { "SOFT" }
            );
        }
        println!(
            "[{}] {name}: {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
        failed += usize::from(!outcome.pass);
    }

    println!(
        "\n{} of {} gating criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
