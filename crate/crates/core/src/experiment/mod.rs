//! Size sweeps: repeated sampling at each target size, per-sample property
//! reports, and aggregation across repetitions.

mod compare;
mod output;

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use compare::{comparative_table, Comparison, Gap, Panel, Point, Series, PANELS};
pub use output::{
    emit_combined_plot_series, emit_csv, emit_json, emit_plot_series, read_json, write_sweep_dir,
    CSV_HEADER,
};

use crate::error::{Error, Result};
use crate::graph::{parse_edge_list, Graph};
use crate::metrics::{full_report, PropertyReport, PROPERTY_NAMES};
use crate::sampling::{sample, SampleSpec, Strategy, DEFAULT_RW_ITERATIONS, DEFAULT_RW_RUNS};
use crate::seed;

pub const DEFAULT_DATASET: &str = "facebook_combined.txt";
pub const DEFAULT_REPETITIONS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentPlan {
    pub strategy: Strategy,
    /// Target per cell: edges for ERS, nodes otherwise. Strictly increasing.
    pub sizes: Vec<usize>,
    pub repetitions: usize,
    pub rw_iterations: usize,
    pub rw_runs: usize,
    pub master_seed: u64,
    pub dataset_path: PathBuf,
}

/// The reference schedule for each strategy on the 4039-node / 88234-edge
/// friendship graph: ERS steps 10000..=70000 edges, NRS 100..=3500 nodes,
/// RW 100..=3000 nodes, with 10 repetitions and 10 walks of 10000 positions.
pub fn reference_plan(strategy: Strategy) -> ExperimentPlan {
    let sizes = match strategy {
        Strategy::Ers => (1..=7).map(|i| i * 10_000).collect(),
        Strategy::Nrs => vec![100, 500, 1000, 1500, 2000, 2500, 3000, 3500],
        Strategy::Rw => vec![100, 500, 1000, 1500, 2000, 2500, 3000],
    };
    ExperimentPlan {
        strategy,
        sizes,
        repetitions: DEFAULT_REPETITIONS,
        rw_iterations: DEFAULT_RW_ITERATIONS,
        rw_runs: DEFAULT_RW_RUNS,
        master_seed: 0,
        dataset_path: PathBuf::from(DEFAULT_DATASET),
    }
}

impl ExperimentPlan {
    pub fn from_json_file(path: &Path) -> Result<ExperimentPlan> {
        let plan: ExperimentPlan = serde_json::from_reader(BufReader::new(File::open(path)?))?;
        Ok(plan)
    }

    /// Graph-independent checks.
    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() {
            return Err(Error::InvalidPlan("sizes must not be empty".into()));
        }
        if self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPlan(
                "sizes must be strictly increasing".into(),
            ));
        }
        if self.repetitions == 0 {
            return Err(Error::InvalidPlan("repetitions must be at least 1".into()));
        }
        for &size in &self.sizes {
            self.spec(size, 0).validate_params()?;
        }
        Ok(())
    }

    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        self.validate()?;
        for &size in &self.sizes {
            self.spec(size, 0).validate(g)?;
        }
        Ok(())
    }

    /// Sample spec of one cell.
    pub fn spec(&self, size: usize, repetition: usize) -> SampleSpec {
        SampleSpec {
            strategy: self.strategy,
            target: size,
            rw_iterations: self.rw_iterations,
            rw_runs: self.rw_runs,
            seed: cell_seed(self.master_seed, size, repetition),
        }
    }
}

/// Seed of the cell `(size, repetition)`: `seed::derive(master, [size, repetition])`.
pub fn cell_seed(master_seed: u64, size: usize, repetition: usize) -> u64 {
    seed::derive(master_seed, &[size as u64, repetition as u64])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSize {
    pub nodes: usize,
    pub edges: usize,
}

/// Outcome of one sample draw. `error` is set when sampling or measuring
/// failed; `sample` is still filled in when the draw itself succeeded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Repetition {
    pub index: usize,
    pub seed: u64,
    pub sample: Option<SampleSize>,
    pub report: Option<PropertyReport>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (`n - 1` denominator); 0 for a single value.
    pub sd: f64,
    pub min: f64,
    pub max: f64,
}

impl Stats {
    pub fn of(values: &[f64]) -> Option<Stats> {
        if values.is_empty() {
            return None;
        }
        let n = values.len();
        let mean = values.iter().sum::<f64>() / n as f64;
        let sd = if n > 1 {
            let ss: f64 = values.iter().map(|x| (x - mean) * (x - mean)).sum();
            (ss / (n - 1) as f64).sqrt()
        } else {
            0.0
        };
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        // Rounding in the mean can step just outside [min, max] when all
        // values are equal.
        Some(Stats {
            n,
            mean: mean.clamp(min, max),
            sd,
            min,
            max,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub sample_nodes: Option<Stats>,
    pub sample_edges: Option<Stats>,
    /// One entry per [`PROPERTY_NAMES`] field, in that order, over the
    /// repetitions that produced a report.
    pub properties: Vec<(String, Option<Stats>)>,
}

impl Aggregate {
    pub fn of(reps: &[Repetition]) -> Aggregate {
        let sizes: Vec<SampleSize> = reps.iter().filter_map(|r| r.sample).collect();
        let nodes: Vec<f64> = sizes.iter().map(|s| s.nodes as f64).collect();
        let edges: Vec<f64> = sizes.iter().map(|s| s.edges as f64).collect();
        let reports: Vec<&PropertyReport> = reps.iter().filter_map(|r| r.report.as_ref()).collect();
        let properties = PROPERTY_NAMES
            .iter()
            .map(|&name| {
                let values: Vec<f64> = reports.iter().map(|r| r.get(name).unwrap()).collect();
                (name.to_string(), Stats::of(&values))
            })
            .collect();
        Aggregate {
            sample_nodes: Stats::of(&nodes),
            sample_edges: Stats::of(&edges),
            properties,
        }
    }

    pub fn property(&self, name: &str) -> Option<&Stats> {
        self.properties
            .iter()
            .find(|(n, _)| n == name)
            .and_then(|(_, s)| s.as_ref())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub strategy: Strategy,
    pub size: usize,
    pub repetitions: Vec<Repetition>,
    pub aggregate: Aggregate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetInfo {
    pub nodes: usize,
    pub edges: usize,
}

impl DatasetInfo {
    pub fn of(g: &Graph) -> DatasetInfo {
        DatasetInfo {
            nodes: g.node_count(),
            edges: g.edge_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub plan: ExperimentPlan,
    pub dataset: DatasetInfo,
    /// Protocol remarks, e.g. deviations from the reference schedule.
    pub notes: Vec<String>,
    pub cells: Vec<Cell>,
}

impl SweepResult {
    pub fn strategy(&self) -> Strategy {
        self.plan.strategy
    }

    pub fn failures(&self) -> usize {
        self.cells
            .iter()
            .flat_map(|c| &c.repetitions)
            .filter(|r| r.error.is_some())
            .count()
    }
}

/// Loads an edge list from disk.
pub fn load_dataset(path: &Path) -> Result<Graph> {
    let (g, stats) = parse_edge_list(BufReader::new(File::open(path)?))?;
    log::info!("loaded {}: {}", path.display(), stats.to_json());
    Ok(g)
}

/// Loads `plan.dataset_path` and runs the sweep on it.
pub fn run_sweep(plan: &ExperimentPlan) -> Result<SweepResult> {
    plan.validate()?;
    let g = load_dataset(&plan.dataset_path)?;
    run_sweep_on(&g, plan)
}

/// Runs every `(size, repetition)` cell of `plan` on `g`.
///
/// Cells run in parallel on the current rayon pool; results are assembled in
/// plan order. A failing cell is recorded in its [`Repetition::error`] and
/// does not stop the sweep.
pub fn run_sweep_on(g: &Graph, plan: &ExperimentPlan) -> Result<SweepResult> {
    plan.validate_for(g)?;
    let jobs: Vec<(usize, usize)> = plan
        .sizes
        .iter()
        .flat_map(|&size| (0..plan.repetitions).map(move |rep| (size, rep)))
        .collect();
    let mut done: Vec<Repetition> = jobs
        .par_iter()
        .map(|&(size, rep)| run_cell(g, plan, size, rep))
        .collect();

    let mut cells = Vec::with_capacity(plan.sizes.len());
    for &size in plan.sizes.iter().rev() {
        let repetitions = done.split_off(done.len() - plan.repetitions);
        cells.push(Cell {
            strategy: plan.strategy,
            size,
            aggregate: Aggregate::of(&repetitions),
            repetitions,
        });
    }
    cells.reverse();

    let mut notes = Vec::new();
    if plan.strategy != Strategy::Ers && plan.repetitions > 1 {
        notes.push(format!(
            "{} results are averaged over {} repetitions; the reference protocol averages repetitions for ers only",
            plan.strategy, plan.repetitions
        ));
    }
    notes.push(format!("master_seed={}", plan.master_seed));

    let result = SweepResult {
        plan: plan.clone(),
        dataset: DatasetInfo::of(g),
        notes,
        cells,
    };
    if result.failures() > 0 {
        log::warn!(
            "{} sweep: {} failed repetitions",
            plan.strategy,
            result.failures()
        );
    }
    Ok(result)
}

/// Draws and measures a single cell. Replaying it needs only the plan and the
/// cell coordinates.
pub fn run_cell(g: &Graph, plan: &ExperimentPlan, size: usize, repetition: usize) -> Repetition {
    let spec = plan.spec(size, repetition);
    let mut rep = Repetition {
        index: repetition,
        seed: spec.seed,
        sample: None,
        report: None,
        error: None,
    };
    match sample(g, &spec) {
        Ok(s) => {
            rep.sample = Some(SampleSize {
                nodes: s.node_count(),
                edges: s.edge_count(),
            });
            match full_report(&s, spec.seed) {
                Ok(report) => rep.report = Some(report),
                Err(e) => rep.error = Some(e.to_string()),
            }
        }
        Err(e) => rep.error = Some(e.to_string()),
    }
    log::debug!(
        "{} size={} rep={} -> {:?}",
        plan.strategy,
        size,
        repetition,
        rep.sample
    );
    rep
}

/// Outcome of [`replicate`].
#[derive(Debug, Clone)]
pub struct Replication {
    pub baseline: PropertyReport,
    pub sweeps: Vec<SweepResult>,
    pub comparison: Comparison,
}

/// Runs the reference plans of all three strategies against `g`, measures the
/// full graph as baseline, and writes everything under `out_dir`:
///
/// ```text
/// out_dir/
///   baseline.json  comparison.json  summary.md
///   plots/<panel>.csv            all strategies together
///   ers/ nrs/ rw/                one sweep directory each
/// ```
pub fn replicate(
    g: &Graph,
    dataset_path: &Path,
    master_seed: u64,
    repetitions: usize,
    out_dir: &Path,
) -> Result<Replication> {
    let plans: Vec<ExperimentPlan> = Strategy::ALL
        .iter()
        .map(|&s| ExperimentPlan {
            master_seed,
            repetitions,
            dataset_path: dataset_path.to_path_buf(),
            ..reference_plan(s)
        })
        .collect();
    for plan in &plans {
        plan.validate_for(g)?;
    }

    log::info!("measuring baseline");
    let baseline = full_report(g, master_seed)?;
    let mut sweeps = Vec::new();
    for plan in &plans {
        log::info!("running {} sweep over {:?}", plan.strategy, plan.sizes);
        let sweep = run_sweep_on(g, plan)?;
        write_sweep_dir(&sweep, &out_dir.join(plan.strategy.as_str()))?;
        sweeps.push(sweep);
    }
    let comparison = comparative_table(&sweeps, &baseline)?;

    std::fs::create_dir_all(out_dir)?;
    serde_json::to_writer_pretty(File::create(out_dir.join("baseline.json"))?, &baseline)?;
    serde_json::to_writer_pretty(File::create(out_dir.join("comparison.json"))?, &comparison)?;
    std::fs::write(out_dir.join("summary.md"), comparison.summary_markdown())?;
    let refs: Vec<&SweepResult> = sweeps.iter().collect();
    emit_combined_plot_series(&refs, &out_dir.join("plots"), Some(&baseline))?;

    Ok(Replication {
        baseline,
        sweeps,
        comparison,
    })
}
