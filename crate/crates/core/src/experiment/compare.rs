use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{DatasetInfo, Stats, SweepResult};
use crate::error::{Error, Result};
use crate::metrics::PropertyReport;
use crate::sampling::Strategy;

/// Chart panels: sample size first, then the seven tracked properties.
pub const PANELS: [&str; 8] = [
    "sample_size",
    "avg_degree",
    "density",
    "modularity",
    "avg_clustering",
    "diameter",
    "avg_path_length",
    "connected_components",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub size: usize,
    pub mean: f64,
    pub sd: f64,
    /// Edge counts, sample-size panel only (`mean`/`sd` hold node counts there).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges_mean: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges_sd: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub strategy: Strategy,
    pub points: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Panel {
    pub property: String,
    /// Full-graph value drawn as a reference line.
    pub baseline: Option<f64>,
    pub series: Vec<Series>,
}

/// Distance between a strategy's largest-size mean and the full-graph value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gap {
    pub property: String,
    pub strategy: Strategy,
    pub size: usize,
    pub mean: f64,
    pub baseline: f64,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub dataset: DatasetInfo,
    pub baseline: PropertyReport,
    pub panels: Vec<Panel>,
    pub gaps: Vec<Gap>,
}

pub(crate) fn series_point(size: usize, stats: &Stats) -> Point {
    Point {
        size,
        mean: stats.mean,
        sd: stats.sd,
        edges_mean: None,
        edges_sd: None,
    }
}

pub(crate) fn panel_series(result: &SweepResult, panel: &str) -> Series {
    let points = result
        .cells
        .iter()
        .filter_map(|cell| {
            let agg = &cell.aggregate;
            if panel == "sample_size" {
                let nodes = agg.sample_nodes.as_ref()?;
                let edges = agg.sample_edges.as_ref()?;
                Some(Point {
                    edges_mean: Some(edges.mean),
                    edges_sd: Some(edges.sd),
                    ..series_point(cell.size, nodes)
                })
            } else {
                agg.property(panel).map(|s| series_point(cell.size, s))
            }
        })
        .collect();
    Series {
        strategy: result.strategy(),
        points,
    }
}

/// Lines up sweeps against the full-graph report: one panel per chart with a
/// series per sweep, and the final-size gap of every property per strategy.
pub fn comparative_table(results: &[SweepResult], baseline: &PropertyReport) -> Result<Comparison> {
    let Some(first) = results.first() else {
        return Err(Error::InvalidPlan(
            "comparison needs at least one sweep".into(),
        ));
    };
    if let Some(other) = results.iter().find(|r| r.dataset != first.dataset) {
        return Err(Error::BaselineMismatch(format!(
            "{:?} vs {:?}",
            first.dataset, other.dataset
        )));
    }

    let panels = PANELS
        .iter()
        .map(|&panel| Panel {
            property: panel.to_string(),
            baseline: baseline.get(panel),
            series: results.iter().map(|r| panel_series(r, panel)).collect(),
        })
        .collect();

    let mut gaps = Vec::new();
    for &property in &PANELS[1..] {
        let reference = baseline.get(property).expect("report field");
        for result in results {
            let last = result
                .cells
                .iter()
                .rev()
                .find_map(|c| c.aggregate.property(property).map(|s| (c.size, s.mean)));
            if let Some((size, mean)) = last {
                gaps.push(Gap {
                    property: property.to_string(),
                    strategy: result.strategy(),
                    size,
                    mean,
                    baseline: reference,
                    gap: (mean - reference).abs(),
                });
            }
        }
    }

    Ok(Comparison {
        dataset: first.dataset,
        baseline: *baseline,
        panels,
        gaps,
    })
}

impl Comparison {
    pub fn gap(&self, property: &str, strategy: Strategy) -> Option<f64> {
        self.gaps
            .iter()
            .find(|g| g.property == property && g.strategy == strategy)
            .map(|g| g.gap)
    }

    /// Strategy with the smallest final-size gap; ties go to the earlier one
    /// in ERS, NRS, RW order.
    pub fn closest(&self, property: &str) -> Option<Strategy> {
        self.gaps
            .iter()
            .filter(|g| g.property == property)
            .min_by(|a, b| a.gap.total_cmp(&b.gap).then(a.strategy.cmp(&b.strategy)))
            .map(|g| g.strategy)
    }

    pub fn strategies(&self) -> Vec<Strategy> {
        let mut s: Vec<Strategy> = self.gaps.iter().map(|g| g.strategy).collect();
        s.sort();
        s.dedup();
        s
    }

    /// Markdown table of final-size gaps, followed by the properties each
    /// strategy tracks best.
    pub fn summary_markdown(&self) -> String {
        let strategies = self.strategies();
        let mut md = String::new();
        let _ = writeln!(
            md,
            "# Final-size gap to the full graph ({} nodes, {} edges)\n",
            self.dataset.nodes, self.dataset.edges
        );
        let _ = write!(md, "| property | full graph |");
        for s in &strategies {
            let _ = write!(md, " {s} |");
        }
        let _ = writeln!(md, " closest |");
        let _ = write!(md, "|---|---|");
        for _ in &strategies {
            let _ = write!(md, "---|");
        }
        let _ = writeln!(md, "---|");
        for &property in &PANELS[1..] {
            let _ = write!(
                md,
                "| {property} | {:.4} |",
                self.baseline.get(property).unwrap_or(f64::NAN)
            );
            for &s in &strategies {
                match self
                    .gaps
                    .iter()
                    .find(|g| g.property == property && g.strategy == s)
                {
                    Some(g) => {
                        let _ = write!(md, " {:.4} (mean {:.4} @ {}) |", g.gap, g.mean, g.size);
                    }
                    None => {
                        let _ = write!(md, " n/a |");
                    }
                }
            }
            let closest = self
                .closest(property)
                .map_or("n/a".to_string(), |s| s.to_string());
            let _ = writeln!(md, " {closest} |");
        }

        let _ = writeln!(md, "\n## Best-preserved properties per strategy\n");
        for &s in &strategies {
            let won: Vec<&str> = PANELS[1..]
                .iter()
                .copied()
                .filter(|p| self.closest(p) == Some(s))
                .collect();
            let list = if won.is_empty() {
                "none".to_string()
            } else {
                won.join(", ")
            };
            let _ = writeln!(md, "- {s}: {list}");
        }
        md
    }
}
