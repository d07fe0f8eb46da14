//! 1-extendability: does every vertex lie in a maximum independent set?

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::{Budget, Solver};
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Verdict {
    Covered {
        #[serde(serialize_with = "crate::serialize_set")]
        witness: VertexSet,
    },
    Uncovered {
        best_size: usize,
    },
}

impl Verdict {
    pub fn is_covered(&self) -> bool {
        matches!(self, Verdict::Covered { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexVerdict {
    pub id: usize,
    pub covered: bool,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendabilityReport {
    pub alpha: usize,
    pub one_extendable: bool,
    pub vertices: Vec<VertexVerdict>,
}

impl ExtendabilityReport {
    pub fn uncovered(&self) -> Vec<usize> {
        self.vertices.iter().filter(|v| !v.covered).map(|v| v.id).collect()
    }
}

/// Parameters shared by the decision procedures.
#[derive(Debug, Default)]
pub struct CheckOptions {
    pub budget: Budget,
    /// Worker threads for per-vertex checks; 0 picks rayon's default.
    pub jobs: usize,
}

fn per_vertex(g: &Graph, k: usize, opts: &CheckOptions) -> Result<Vec<VertexVerdict>> {
    let solver = Solver::new(g, &opts.budget);
    let check = |v: usize| -> Result<VertexVerdict> {
        let rest = g.vertex_set().difference(&g.closed_neighborhood(v));
        let mut s = solver.reach_within(&rest, k.saturating_sub(1))?;
        s.insert(v);
        let verdict = if s.len() >= k.max(1) {
            while s.len() > k.max(1) {
                let drop = s.iter().filter(|&w| w != v).last().expect("more than one member");
                s.remove(drop);
            }
            Verdict::Covered { witness: s }
        } else {
            Verdict::Uncovered { best_size: s.len() }
        };
        Ok(VertexVerdict { id: v, covered: verdict.is_covered(), verdict })
    };
    let run = || (0..g.n()).into_par_iter().map(check).collect::<Result<Vec<_>>>();
    if opts.jobs == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run)
    }
}

pub fn is_one_extendable_with(g: &Graph, opts: &CheckOptions) -> Result<ExtendabilityReport> {
    let alpha = Solver::new(g, &opts.budget).max_independent_set()?.alpha;
    let vertices = per_vertex(g, alpha, opts)?;
    Ok(ExtendabilityReport { alpha, one_extendable: vertices.iter().all(|v| v.covered), vertices })
}

pub fn is_one_extendable(g: &Graph) -> Result<ExtendabilityReport> {
    is_one_extendable_with(g, &CheckOptions::default())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamReport {
    pub k: usize,
    pub holds: bool,
    pub vertices: Vec<VertexVerdict>,
}

/// Does every vertex lie in an independent set of size `k`?
pub fn param_one_extendability_with(g: &Graph, k: usize, opts: &CheckOptions) -> Result<ParamReport> {
    let vertices = if k == 0 {
        (0..g.n())
            .map(|v| VertexVerdict {
                id: v,
                covered: true,
                verdict: Verdict::Covered { witness: VertexSet::from_iter_in(g.n(), [v]) },
            })
            .collect()
    } else {
        per_vertex(g, k, opts)?
    };
    Ok(ParamReport { k, holds: vertices.iter().all(|v| v.covered), vertices })
}

pub fn param_one_extendability(g: &Graph, k: usize) -> Result<ParamReport> {
    param_one_extendability_with(g, k, &CheckOptions::default())
}
