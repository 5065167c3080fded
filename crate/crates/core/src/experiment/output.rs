use std::fs::{self, File};
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use super::compare::{panel_series, PANELS};
use super::SweepResult;
use crate::error::Result;
use crate::metrics::{PropertyReport, PROPERTY_NAMES};

pub const CSV_HEADER: [&str; 15] = [
    "strategy",
    "size",
    "repetition",
    "seed",
    "sample_nodes",
    "sample_edges",
    "avg_degree",
    "density",
    "modularity",
    "avg_clustering",
    "diameter",
    "avg_path_length",
    "connected_components",
    "largest_component_fraction",
    "error",
];

/// One row per `(strategy, size, repetition)`. Failed measurements leave the
/// property columns empty and fill `error`.
pub fn emit_csv<W: Write>(result: &SweepResult, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for cell in &result.cells {
        for rep in &cell.repetitions {
            let mut row = vec![
                cell.strategy.to_string(),
                cell.size.to_string(),
                rep.index.to_string(),
                rep.seed.to_string(),
            ];
            match rep.sample {
                Some(s) => row.extend([s.nodes.to_string(), s.edges.to_string()]),
                None => row.extend([String::new(), String::new()]),
            }
            match &rep.report {
                Some(r) => row.extend(r.values().iter().map(f64::to_string)),
                None => row.extend(PROPERTY_NAMES.iter().map(|_| String::new())),
            }
            row.push(rep.error.clone().unwrap_or_default());
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Full nested result, plan and seeds included.
pub fn emit_json<W: Write>(result: &SweepResult, out: W) -> Result<()> {
    let mut out = BufWriter::new(out);
    serde_json::to_writer_pretty(&mut out, result)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

pub fn read_json<R: Read>(input: R) -> Result<SweepResult> {
    Ok(serde_json::from_reader(input)?)
}

/// One CSV per chart panel under `dir` for a single sweep.
pub fn emit_plot_series(result: &SweepResult, dir: &Path) -> Result<()> {
    emit_combined_plot_series(&[result], dir, None)
}

/// One CSV per chart panel under `dir`, with every sweep's series in
/// long format (`strategy,size,mean,sd`). The sample-size panel carries
/// `nodes_mean,nodes_sd,edges_mean,edges_sd` instead. When `baseline` is given
/// each property row also carries the full-graph value.
pub fn emit_combined_plot_series(
    results: &[&SweepResult],
    dir: &Path,
    baseline: Option<&PropertyReport>,
) -> Result<()> {
    fs::create_dir_all(dir)?;
    for panel in PANELS {
        let mut w = csv::Writer::from_path(dir.join(format!("{panel}.csv")))?;
        let sample_panel = panel == "sample_size";
        let reference = baseline.and_then(|b| b.get(panel));
        let mut header = vec!["strategy", "size"];
        if sample_panel {
            header.extend(["nodes_mean", "nodes_sd", "edges_mean", "edges_sd"]);
        } else {
            header.extend(["mean", "sd"]);
            if reference.is_some() {
                header.push("baseline");
            }
        }
        w.write_record(&header)?;
        for result in results {
            let series = panel_series(result, panel);
            for p in &series.points {
                let mut row = vec![
                    series.strategy.to_string(),
                    p.size.to_string(),
                    p.mean.to_string(),
                    p.sd.to_string(),
                ];
                if sample_panel {
                    row.push(p.edges_mean.unwrap_or(f64::NAN).to_string());
                    row.push(p.edges_sd.unwrap_or(f64::NAN).to_string());
                } else if let Some(b) = reference {
                    row.push(b.to_string());
                }
                w.write_record(&row)?;
            }
        }
        w.flush()?;
    }
    Ok(())
}

/// Writes `plan.json`, `results.json`, `results.csv` and `plots/` under `dir`.
pub fn write_sweep_dir(result: &SweepResult, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut plan = BufWriter::new(File::create(dir.join("plan.json"))?);
    serde_json::to_writer_pretty(&mut plan, &result.plan)?;
    writeln!(plan)?;
    plan.flush()?;
    emit_json(result, File::create(dir.join("results.json"))?)?;
    emit_csv(
        result,
        BufWriter::new(File::create(dir.join("results.csv"))?),
    )?;
    emit_plot_series(result, &dir.join("plots"))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::{reference_plan, run_sweep_on, ExperimentPlan};
    use crate::sampling::Strategy;
    use crate::synthetic;

    fn small_sweep() -> SweepResult {
        let g = synthetic::social_graph(150, 900, 3).unwrap();
        let plan = ExperimentPlan {
            sizes: vec![60],
            repetitions: 4,
            ..reference_plan(Strategy::Nrs)
        };
        run_sweep_on(&g, &plan).unwrap()
    }

    #[test]
    fn csv_has_header_plus_one_row_per_repetition() {
        let result = small_sweep();
        let mut buf = Vec::new();
        emit_csv(&result, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 1 + 4);
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert!(lines[1].starts_with("nrs,60,0,"));
    }

    #[test]
    fn json_round_trip() {
        let result = small_sweep();
        let mut buf = Vec::new();
        emit_json(&result, &mut buf).unwrap();
        assert_eq!(read_json(buf.as_slice()).unwrap(), result);
    }

    #[test]
    fn sweep_dir_layout() {
        let result = small_sweep();
        let dir = tempfile::tempdir().unwrap();
        write_sweep_dir(&result, dir.path()).unwrap();
        for f in ["plan.json", "results.json", "results.csv"] {
            assert!(dir.path().join(f).is_file(), "{f}");
        }
        let plots: Vec<_> = fs::read_dir(dir.path().join("plots")).unwrap().collect();
        assert_eq!(plots.len(), 8);
        let size_panel = fs::read_to_string(dir.path().join("plots/sample_size.csv")).unwrap();
        assert!(size_panel.starts_with("strategy,size,nodes_mean,nodes_sd,edges_mean,edges_sd\n"));
        let plan: ExperimentPlan =
            serde_json::from_reader(File::open(dir.path().join("plan.json")).unwrap()).unwrap();
        assert_eq!(plan, result.plan);
    }
}
