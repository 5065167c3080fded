//! Whole-graph properties: degree, density, modularity, clustering, path
//! lengths, components, and betweenness.

mod basic;
mod betweenness;
mod clustering;
mod community;
mod components;
mod paths;

use serde::{Deserialize, Serialize};

pub use basic::{average_degree, density};
pub use betweenness::betweenness_centrality;
pub use clustering::{
    average_clustering, average_clustering_all_nodes, local_clustering, triangles_per_node,
};
pub use community::{louvain_communities, modularity, Partition, LOUVAIN_MIN_GAIN};
pub use components::{connected_components, Components};
pub use paths::{diameter_and_apl, distances_from, PathSummary};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The seven tracked properties of one graph, plus the share of nodes in the
/// component that diameter and path length were measured on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub avg_degree: f64,
    pub density: f64,
    pub modularity: f64,
    pub avg_clustering: f64,
    pub diameter: u32,
    pub avg_path_length: f64,
    pub connected_components: usize,
    pub largest_component_fraction: f64,
}

/// Names of the eight report fields, in serialization order.
pub const PROPERTY_NAMES: [&str; 8] = [
    "avg_degree",
    "density",
    "modularity",
    "avg_clustering",
    "diameter",
    "avg_path_length",
    "connected_components",
    "largest_component_fraction",
];

impl PropertyReport {
    /// Field value by name, as `f64`.
    pub fn get(&self, name: &str) -> Option<f64> {
        Some(match name {
            "avg_degree" => self.avg_degree,
            "density" => self.density,
            "modularity" => self.modularity,
            "avg_clustering" => self.avg_clustering,
            "diameter" => self.diameter as f64,
            "avg_path_length" => self.avg_path_length,
            "connected_components" => self.connected_components as f64,
            "largest_component_fraction" => self.largest_component_fraction,
            _ => return None,
        })
    }

    pub fn values(&self) -> [f64; 8] {
        PROPERTY_NAMES.map(|name| self.get(name).expect("known property"))
    }
}

/// Computes every property; modularity uses [`louvain_communities`] seeded
/// with `seed`.
pub fn full_report(g: &Graph, seed: u64) -> Result<PropertyReport> {
    if g.edge_count() == 0 {
        return Err(Error::ModularityUndefined);
    }
    let density = density(g)?;
    let partition = louvain_communities(g, seed)?;
    let modularity = modularity(g, &partition)?;
    let components = connected_components(g);
    let paths = diameter_and_apl(g)?;
    Ok(PropertyReport {
        avg_degree: average_degree(g),
        density,
        modularity,
        avg_clustering: average_clustering(g),
        diameter: paths.diameter,
        avg_path_length: paths.avg_path_length,
        connected_components: components.count,
        largest_component_fraction: paths.component_nodes as f64 / g.node_count() as f64,
    })
}
