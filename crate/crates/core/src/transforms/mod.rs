//! Graph constructions with provenance labels and vertex-map certificates.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

mod basic;
mod cliques;
mod crossings;
mod gadget;

pub use basic::{g_plus, t1_pendant, t2_subdivide, t3_degree_reduce};
pub use cliques::{gap_construction, validate_clique_partition, w1_construction};
pub use crossings::{replace_crossings, replace_crossings_plan, Crossing, CrossingPlan, CrossingSpec, EdgeChain};
pub use gadget::{gjs_gadget, GadgetGraph, GADGET_ALPHA, GADGET_SIZE, GADGET_TABLE};

/// Records how the vertices of an input graph map into a constructed graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TransformCertificate {
    pub transform: String,
    pub params: BTreeMap<String, i64>,
    /// For each input vertex, its images in the output. The first entry is
    /// the vertex itself or, for T3, the first vertex of its path.
    pub vertex_map: Vec<Vec<usize>>,
    /// Named groups of added vertices.
    pub groups: BTreeMap<String, Vec<usize>>,
}

impl TransformCertificate {
    pub(crate) fn new(name: &str, g: &Graph) -> Self {
        TransformCertificate {
            transform: name.to_string(),
            vertex_map: (0..g.n()).map(|v| vec![v]).collect(),
            ..Default::default()
        }
    }

    pub(crate) fn param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }
}

pub(crate) fn label_of(g: &Graph, v: usize) -> String {
    g.label(v).map(str::to_string).unwrap_or_else(|| v.to_string())
}

pub(crate) fn check_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(Error::InvalidCrossing(format!("edge {u}-{v} is not in the graph")));
    }
    Ok(())
}
