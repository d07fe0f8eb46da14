use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

use super::gadget::{gjs_gadget, GADGET_SIZE};
use super::{check_edge, TransformCertificate};

/// An edge `uu'` together with the edges crossing it, in order from `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingSpec {
    pub through: (usize, usize),
    pub crossed: Vec<(usize, usize)>,
}

/// One crossing. The gadget's `x, x'` go on `x_edge` and `y, y'` on
/// `y_edge`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub x_edge: (usize, usize),
    pub y_edge: (usize, usize),
}

/// The crossings met along edge `from`-`to`, in order from `from`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeChain {
    pub from: usize,
    pub to: usize,
    pub stops: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CrossingPlan {
    pub crossings: Vec<Crossing>,
    pub chains: Vec<EdgeChain>,
}

fn key(e: (usize, usize)) -> (usize, usize) {
    (e.0.min(e.1), e.0.max(e.1))
}

impl CrossingPlan {
    /// Through-edges are traversed from their first endpoint; a crossed edge
    /// `(v, v')` is traversed from `v` as first listed, meeting its crossings
    /// in the order the specs list them.
    pub fn from_specs(specs: &[CrossingSpec]) -> Result<CrossingPlan> {
        let mut plan = CrossingPlan::default();
        let mut chain_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut through = BTreeSet::new();
        let mut crossed = BTreeSet::new();
        for spec in specs {
            let t = key(spec.through);
            if !through.insert(t) {
                return Err(Error::InvalidCrossing(format!("edge {}-{} is a through-edge twice", t.0, t.1)));
            }
            if crossed.contains(&t) {
                return Err(Error::InvalidCrossing(format!(
                    "edge {}-{} is used both as through-edge and as crossed edge",
                    t.0, t.1
                )));
            }
            let ci = plan.chains.len();
            plan.chains.push(EdgeChain { from: spec.through.0, to: spec.through.1, stops: Vec::new() });
            chain_of.insert(t, ci);
            let mut local = BTreeSet::new();
            for &e in &spec.crossed {
                let k = key(e);
                if through.contains(&k) {
                    return Err(Error::InvalidCrossing(format!(
                        "edge {}-{} is used both as through-edge and as crossed edge",
                        k.0, k.1
                    )));
                }
                if !local.insert(k) {
                    return Err(Error::InvalidCrossing(format!(
                        "edge {}-{} listed twice on one through-edge",
                        k.0, k.1
                    )));
                }
                crossed.insert(k);
                let c = plan.crossings.len();
                plan.crossings.push(Crossing { x_edge: spec.through, y_edge: e });
                plan.chains[ci].stops.push(c);
                let cj = *chain_of.entry(k).or_insert_with(|| {
                    plan.chains.push(EdgeChain { from: e.0, to: e.1, stops: Vec::new() });
                    plan.chains.len() - 1
                });
                plan.chains[cj].stops.push(c);
            }
        }
        Ok(plan)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut visits = vec![(0usize, 0usize); self.crossings.len()];
        for (i, ch) in self.chains.iter().enumerate() {
            check_edge(g, ch.from, ch.to)?;
            if seen.insert(key((ch.from, ch.to)), i).is_some() {
                return Err(Error::InvalidCrossing(format!("edge {}-{} has two chains", ch.from, ch.to)));
            }
            for &c in &ch.stops {
                let cr = self
                    .crossings
                    .get(c)
                    .ok_or_else(|| Error::InvalidCrossing(format!("chain refers to missing crossing {c}")))?;
                let k = key((ch.from, ch.to));
                if k == key(cr.x_edge) {
                    visits[c].0 += 1;
                } else if k == key(cr.y_edge) {
                    visits[c].1 += 1;
                } else {
                    return Err(Error::InvalidCrossing(format!("crossing {c} does not involve edge {}-{}", k.0, k.1)));
                }
            }
        }
        for (c, cr) in self.crossings.iter().enumerate() {
            if key(cr.x_edge) == key(cr.y_edge) {
                return Err(Error::InvalidCrossing(format!("crossing {c} crosses an edge with itself")));
            }
            if visits[c] != (1, 1) {
                return Err(Error::InvalidCrossing(format!("crossing {c} must appear once on each of its two edges")));
            }
        }
        Ok(())
    }
}

/// Replaces each crossing by a gadget. Gadget `i` occupies ids
/// `n + 22*i ..` with labels `gadget<i>:<role>`. Along every chain the
/// gadget's unprimed endpoint faces the chain start.
pub fn replace_crossings_plan(g: &Graph, plan: &CrossingPlan) -> Result<(Graph, TransformCertificate)> {
    plan.validate(g)?;
    let gadget = gjs_gadget();
    let mut b = GraphBuilder::from_graph(g);
    let mut cert = TransformCertificate::new("replace-crossings", g).param("lambda", plan.crossings.len() as i64);
    let mut base = Vec::with_capacity(plan.crossings.len());
    for i in 0..plan.crossings.len() {
        let off = b.n();
        for v in 0..GADGET_SIZE {
            b.add_labeled(format!("gadget{i}:{}", gadget.graph.label(v).expect("gadget labels")));
        }
        for (u, v) in gadget.graph.edges() {
            b.add_edge(off + u, off + v)?;
        }
        cert.groups.insert(format!("gadget{i}"), (off..off + GADGET_SIZE).collect());
        base.push(off);
    }
    for ch in &plan.chains {
        b.remove_edge(ch.from, ch.to)?;
        let mut prev = ch.from;
        for &c in &ch.stops {
            let [inn, out] =
                if key(plan.crossings[c].x_edge) == key((ch.from, ch.to)) { gadget.x_pair() } else { gadget.y_pair() };
            b.add_edge(prev, base[c] + inn)?;
            prev = base[c] + out;
        }
        b.add_edge(prev, ch.to)?;
    }
    Ok((b.build()?, cert))
}

pub fn replace_crossings(g: &Graph, specs: &[CrossingSpec]) -> Result<(Graph, TransformCertificate)> {
    replace_crossings_plan(g, &CrossingPlan::from_specs(specs)?)
}
