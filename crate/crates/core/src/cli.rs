//! `netsample` command line: `sample`, `metrics`, `experiment`, `replicate`.
//!
//! Exit codes: 0 success, 1 dataset parse or measurement failure, 2 invalid
//! arguments or spec, 3 I/O failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::experiment::{self, ExperimentPlan};
use crate::graph::{write_edge_list, Graph};
use crate::metrics;
use crate::sampling::{self, Provenance, SampleSpec, Strategy};

/// Above this many nodes the betweenness export prints a runtime warning.
pub const BETWEENNESS_WARN_NODES: usize = 2_000;

#[derive(Debug, Parser)]
#[command(
    name = "netsample",
    version,
    about = "Sample large graphs and track how their properties evolve"
)]
pub struct CommandConfig {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Increase log verbosity (-v info, -vv debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw one sample and write it as an edge list with a provenance sidecar.
    Sample(SampleArgs),
    /// Print the property report of a graph as JSON.
    Metrics(MetricsArgs),
    /// Run one size sweep and write its output directory.
    Experiment(ExperimentArgs),
    /// Run the reference sweeps of all three strategies plus the baseline.
    Replicate(ReplicateArgs),
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// Edge list to sample from.
    pub input: PathBuf,
    /// JSON sample spec; flags override its fields.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub strategy: Option<Strategy>,
    /// Edges for ers, nodes for nrs and rw.
    #[arg(long)]
    pub target: Option<usize>,
    #[arg(long)]
    pub rw_iterations: Option<usize>,
    #[arg(long)]
    pub rw_runs: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output edge list (default: sample_<strategy>_<target>_<seed>.txt).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    pub input: PathBuf,
    /// Louvain seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the report JSON here.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Write per-node betweenness CSV here (slow on large graphs).
    #[arg(long)]
    pub betweenness: Option<PathBuf>,
    /// Write the Louvain partition CSV here.
    #[arg(long)]
    pub partition: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    /// Dataset edge list; overrides the plan's dataset_path.
    pub dataset: Option<PathBuf>,
    /// JSON experiment plan; flags override its fields.
    #[arg(long)]
    pub plan: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub strategy: Option<Strategy>,
    /// Comma-separated target sizes.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    #[arg(long)]
    pub repetitions: Option<usize>,
    #[arg(long)]
    pub rw_iterations: Option<usize>,
    #[arg(long)]
    pub rw_runs: Option<usize>,
    /// Master seed.
    #[arg(long, alias = "master-seed")]
    pub seed: Option<u64>,
    #[arg(long)]
    pub output_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct ReplicateArgs {
    pub dataset: PathBuf,
    /// Master seed shared by all sweeps and the baseline.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = experiment::DEFAULT_REPETITIONS)]
    pub repetitions: usize,
    #[arg(long)]
    pub output_dir: PathBuf,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidSpec(_) | Error::InvalidPlan(_) => 2,
        Error::Io(_) => 3,
        _ => 1,
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CommandConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    init_logging(config.verbose);
    let workers = config
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    match crate::with_workers(workers, || execute(config.command)).and_then(|r| r) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_target(false)
        .try_init();
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Sample(a) => cmd_sample(a),
        Command::Metrics(a) => cmd_metrics(a),
        Command::Experiment(a) => cmd_experiment(a),
        Command::Replicate(a) => cmd_replicate(a),
    }
}

fn load(path: &Path) -> Result<Graph> {
    experiment::load_dataset(path)
}

fn sample_spec(a: &SampleArgs) -> Result<SampleSpec> {
    let base: Option<SampleSpec> = match &a.spec {
        Some(p) => Some(
            serde_json::from_reader(io::BufReader::new(File::open(p)?))
                .map_err(|e| Error::InvalidSpec(format!("{}: {e}", p.display())))?,
        ),
        None => None,
    };
    let strategy = a
        .strategy
        .or(base.map(|s| s.strategy))
        .ok_or_else(|| Error::InvalidSpec("--strategy is required".into()))?;
    let target = a
        .target
        .or(base.map(|s| s.target))
        .ok_or_else(|| Error::InvalidSpec("--target is required".into()))?;
    if strategy != Strategy::Rw && (a.rw_iterations.is_some() || a.rw_runs.is_some()) {
        return Err(Error::InvalidSpec(
            "--rw-iterations/--rw-runs only apply to --strategy rw".into(),
        ));
    }
    let defaults = SampleSpec::new(strategy, target, 0);
    let spec = SampleSpec {
        strategy,
        target,
        rw_iterations: a
            .rw_iterations
            .or(base.map(|s| s.rw_iterations))
            .unwrap_or(defaults.rw_iterations),
        rw_runs: a
            .rw_runs
            .or(base.map(|s| s.rw_runs))
            .unwrap_or(defaults.rw_runs),
        seed: a.seed.or(base.map(|s| s.seed)).unwrap_or(0),
    };
    spec.validate_params()?;
    Ok(spec)
}

/// Sidecar path for a sample written to `output`.
pub fn provenance_path(output: &Path) -> PathBuf {
    output.with_extension("provenance.json")
}

fn cmd_sample(a: SampleArgs) -> Result<i32> {
    let spec = sample_spec(&a)?;
    let g = load(&a.input)?;
    spec.validate(&g)?;
    let s = sampling::sample(&g, &spec)?;

    let output = a.output.clone().unwrap_or_else(|| {
        PathBuf::from(format!(
            "sample_{}_{}_{}.txt",
            spec.strategy, spec.target, spec.seed
        ))
    });
    write_edge_list(&s, BufWriter::new(File::create(&output)?))?;
    let provenance = Provenance {
        spec,
        input: a.input.display().to_string(),
        source_nodes: g.node_count(),
        source_edges: g.edge_count(),
        sample_nodes: s.node_count(),
        sample_edges: s.edge_count(),
    };
    let sidecar = provenance_path(&output);
    serde_json::to_writer_pretty(BufWriter::new(File::create(&sidecar)?), &provenance)?;
    println!(
        "{} sample: nodes={} edges={} seed={} -> {}",
        spec.strategy,
        s.node_count(),
        s.edge_count(),
        spec.seed,
        output.display()
    );
    Ok(0)
}

fn cmd_metrics(a: MetricsArgs) -> Result<i32> {
    let g = load(&a.input)?;
    let report = metrics::full_report(&g, a.seed)?;
    let json = serde_json::to_string_pretty(&report)?;
    println!("{json}");
    eprintln!(
        "nodes={} edges={} seed={}",
        g.node_count(),
        g.edge_count(),
        a.seed
    );
    if let Some(path) = &a.output {
        std::fs::write(path, format!("{json}\n"))?;
    }
    if let Some(path) = &a.partition {
        let partition = metrics::louvain_communities(&g, a.seed)?;
        partition.write_csv(&g, BufWriter::new(File::create(path)?))?;
    }
    if let Some(path) = &a.betweenness {
        if g.node_count() > BETWEENNESS_WARN_NODES {
            log::warn!(
                "betweenness on {} nodes runs one BFS per node and may take a while",
                g.node_count()
            );
        }
        let scores = metrics::betweenness_centrality(&g);
        let mut w = csv::Writer::from_writer(BufWriter::new(File::create(path)?));
        w.write_record(["node_label", "betweenness"])?;
        for (u, score) in scores.iter().enumerate() {
            w.write_record([g.label(u).to_string(), score.to_string()])?;
        }
        w.flush()?;
    }
    Ok(0)
}

fn experiment_plan(a: &ExperimentArgs) -> Result<ExperimentPlan> {
    let mut plan = match (&a.plan, a.strategy) {
        (Some(p), _) => ExperimentPlan::from_json_file(p).map_err(|e| match e {
            Error::Json(e) => Error::InvalidPlan(format!("{}: {e}", p.display())),
            other => other,
        })?,
        (None, Some(s)) => experiment::reference_plan(s),
        (None, None) => {
            return Err(Error::InvalidPlan(
                "either --plan or --strategy is required".into(),
            ))
        }
    };
    if let Some(s) = a.strategy {
        if a.plan.is_some() && s != plan.strategy && a.sizes.is_none() {
            // Sizes from a plan for another strategy are meaningless.
            plan.sizes = experiment::reference_plan(s).sizes;
        }
        plan.strategy = s;
    }
    if plan.strategy != Strategy::Rw && (a.rw_iterations.is_some() || a.rw_runs.is_some()) {
        return Err(Error::InvalidPlan(
            "--rw-iterations/--rw-runs only apply to --strategy rw".into(),
        ));
    }
    if let Some(sizes) = &a.sizes {
        plan.sizes = sizes.clone();
    }
    if let Some(r) = a.repetitions {
        plan.repetitions = r;
    }
    if let Some(i) = a.rw_iterations {
        plan.rw_iterations = i;
    }
    if let Some(r) = a.rw_runs {
        plan.rw_runs = r;
    }
    if let Some(s) = a.seed {
        plan.master_seed = s;
    }
    if let Some(d) = &a.dataset {
        plan.dataset_path = d.clone();
    }
    plan.validate()?;
    Ok(plan)
}

fn cmd_experiment(a: ExperimentArgs) -> Result<i32> {
    let plan = experiment_plan(&a)?;
    let g = load(&plan.dataset_path)?;
    let result = experiment::run_sweep_on(&g, &plan)?;
    experiment::write_sweep_dir(&result, &a.output_dir)?;

    let total: usize = result.cells.iter().map(|c| c.repetitions.len()).sum();
    let failed = result.failures();
    println!(
        "{} sweep: {} cells x {} repetitions, {} failed, master_seed={} -> {}",
        plan.strategy,
        plan.sizes.len(),
        plan.repetitions,
        failed,
        plan.master_seed,
        a.output_dir.display()
    );
    for cell in &result.cells {
        let nodes = cell.aggregate.sample_nodes.map_or(f64::NAN, |s| s.mean);
        let edges = cell.aggregate.sample_edges.map_or(f64::NAN, |s| s.mean);
        println!(
            "  size {:>6}: nodes {:>9.1} edges {:>9.1}",
            cell.size, nodes, edges
        );
    }
    Ok(if failed == total { 1 } else { 0 })
}

fn cmd_replicate(a: ReplicateArgs) -> Result<i32> {
    if a.repetitions == 0 {
        return Err(Error::InvalidPlan("repetitions must be at least 1".into()));
    }
    let g = load(&a.dataset)?;
    let outcome = experiment::replicate(&g, &a.dataset, a.seed, a.repetitions, &a.output_dir)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", outcome.comparison.summary_markdown())?;
    writeln!(out, "master_seed={} -> {}", a.seed, a.output_dir.display())?;
    let failed: usize = outcome.sweeps.iter().map(|s| s.failures()).sum();
    let total: usize = outcome
        .sweeps
        .iter()
        .flat_map(|s| &s.cells)
        .map(|c| c.repetitions.len())
        .sum();
    Ok(if failed == total { 1 } else { 0 })
}
