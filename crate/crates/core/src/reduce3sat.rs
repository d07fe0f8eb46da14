//! From a planar monotone rectilinear 3SAT layout to a graph that is
//! 1-extendable iff the formula is satisfiable.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::transforms::{
    replace_crossings_plan, t3_degree_reduce, Crossing, CrossingPlan, EdgeChain, TransformCertificate,
};

type Q = Ratio<i128>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub x: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leg {
    pub var: String,
    pub x: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub sign: Sign,
    pub y: i64,
    pub legs: Vec<Leg>,
}

/// A monotone 3-CNF formula with its rectilinear drawing. Coordinates are
/// integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectilinearFormula {
    pub variables: Vec<Variable>,
    pub clauses: Vec<Clause>,
}

impl RectilinearFormula {
    pub fn parse(text: &str) -> Result<Self> {
        let f: RectilinearFormula = serde_json::from_str(text)?;
        f.validate()?;
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    /// Segment `[l, r]` of clause `j`.
    pub fn segment(&self, j: usize) -> (i64, i64) {
        let xs = self.clauses[j].legs.iter().map(|l| l.x);
        (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(0))
    }

    /// Checks the layout rules:
    /// - variables have distinct names and strictly increasing x;
    /// - each clause has three legs of one sign, on the matching side of
    ///   the axis, at distinct x-positions;
    /// - a leg lies in its variable's cell, i.e. strictly nearer to that
    ///   variable than to any other;
    /// - clauses on one side sit on distinct levels, legs on one side have
    ///   distinct x-positions, and no leg crosses a clause segment.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidFormula(m));
        for (i, v) in self.variables.iter().enumerate() {
            if self.variables[..i].iter().any(|w| w.name == v.name) {
                return bad(format!("variable {:?} declared twice", v.name));
            }
            if i > 0 && self.variables[i - 1].x >= v.x {
                return bad(format!("variable {:?} is not strictly right of its predecessor", v.name));
            }
        }
        for (j, c) in self.clauses.iter().enumerate() {
            if c.legs.len() != 3 {
                return bad(format!("clause {j} has {} literals, expected 3", c.legs.len()));
            }
            match c.sign {
                Sign::Positive if c.y <= 0 => return bad(format!("positive clause {j} must lie above the axis")),
                Sign::Negative if c.y >= 0 => return bad(format!("negative clause {j} must lie below the axis")),
                _ => {}
            }
            for (q, leg) in c.legs.iter().enumerate() {
                let Some(i) = self.var_index(&leg.var) else {
                    return bad(format!("clause {j} uses unknown variable {:?}", leg.var));
                };
                if c.legs[..q].iter().any(|l| l.x == leg.x) {
                    return bad(format!("clause {j} has two legs at x = {}", leg.x));
                }
                let d = (leg.x - self.variables[i].x).abs();
                if self.variables.iter().enumerate().any(|(k, w)| k != i && (leg.x - w.x).abs() <= d) {
                    return bad(format!("leg of clause {j} at x = {} is not in the cell of {:?}", leg.x, leg.var));
                }
            }
        }
        for (j, c) in self.clauses.iter().enumerate() {
            for (k, d) in self.clauses.iter().enumerate().take(j) {
                if c.y == d.y {
                    return bad(format!("clauses {k} and {j} share level y = {}", c.y));
                }
                if c.y.signum() == d.y.signum() {
                    for a in &c.legs {
                        if d.legs.iter().any(|b| b.x == a.x) {
                            return bad(format!("clauses {k} and {j} have overlapping legs at x = {}", a.x));
                        }
                    }
                }
            }
        }
        for (j, c) in self.clauses.iter().enumerate() {
            for (k, d) in self.clauses.iter().enumerate() {
                if c.y.signum() != d.y.signum() || d.y.abs() >= c.y.abs() {
                    continue;
                }
                let (l, r) = self.segment(k);
                if let Some(leg) = c.legs.iter().find(|leg| l <= leg.x && leg.x <= r) {
                    return bad(format!("leg of clause {j} at x = {} crosses the segment of clause {k}", leg.x));
                }
            }
        }
        Ok(())
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.legs.iter().any(|l| {
                let v = assignment[self.var_index(&l.var).expect("validated")];
                v == (c.sign == Sign::Positive)
            })
        })
    }

    /// Exhaustive search; fine for the handful of variables this is used on.
    pub fn satisfying_assignment(&self) -> Option<Vec<bool>> {
        let n = self.variables.len();
        assert!(n < 26, "exhaustive search over {n} variables");
        (0u32..1 << n).map(|m| (0..n).map(|i| m >> i & 1 == 1).collect::<Vec<_>>()).find(|a| self.satisfied_by(a))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Cycle,
    Leg,
    TEdge,
    /// The `v1 v3` edge of a clause triangle, drawn just beyond its segment
    /// on the pendant side.
    Curve,
    Pendant,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CrossingType {
    /// Pendant edge against a triangle edge.
    A,
    /// Pendant edge against a pendant edge.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingRecord {
    #[serde(rename = "type")]
    pub kind: CrossingType,
    /// The pendant edge, oriented from triangle vertex to pendant.
    pub pendant: (usize, usize),
    pub other: (usize, usize),
}

/// The intermediate graph with the drawing data needed to find crossings.
#[derive(Clone, Debug)]
pub struct EmbeddedGraph {
    pub graph: Graph,
    /// Plane position per vertex. Cycle vertices sit on the axis at their leg
    /// (or at the variable when unattached).
    pub coords: Vec<(i64, i64)>,
    pub edge_kinds: BTreeMap<(usize, usize), EdgeKind>,
    pub crossings: Vec<CrossingRecord>,
    /// Crossings arranged per edge in drawing order, ready for gadget
    /// replacement.
    pub plan: CrossingPlan,
    /// Triangle vertices `v1, v2, v3` (left to right) per clause.
    pub triangles: Vec<[usize; 3]>,
    pub pendants: Vec<usize>,
    /// Cycle vertices `x^1, x̄^1, ..., x^r, x̄^r` per variable.
    pub cycles: Vec<Vec<usize>>,
}

impl EmbeddedGraph {
    /// Total number of variable-cycle vertices.
    pub fn c_star(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }
}

type Pt = (i128, i128);

fn orient(a: Pt, b: Pt, c: Pt) -> i128 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

fn on_segment(a: Pt, b: Pt, p: Pt) -> bool {
    orient(a, b, p) == 0 && a.0.min(b.0) <= p.0 && p.0 <= a.0.max(b.0) && a.1.min(b.1) <= p.1 && p.1 <= a.1.max(b.1)
}

/// `Some(t)` with `p1 + t (p2 - p1)` the crossing point when the segments
/// cross properly; `None` when disjoint; an error when they touch.
fn crossing_param(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> std::result::Result<Option<Q>, ()> {
    let (d1, d2) = (orient(q1, q2, p1), orient(q1, q2, p2));
    let (d3, d4) = (orient(p1, p2, q1), orient(p1, p2, q2));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        let cross = |u: Pt, v: Pt| u.0 * v.1 - u.1 * v.0;
        let r = (p2.0 - p1.0, p2.1 - p1.1);
        let s = (q2.0 - q1.0, q2.1 - q1.1);
        let qp = (q1.0 - p1.0, q1.1 - p1.1);
        return Ok(Some(Q::new(cross(qp, s), cross(r, s))));
    }
    if on_segment(q1, q2, p1) || on_segment(q1, q2, p2) || on_segment(p1, p2, q1) || on_segment(p1, p2, q2) {
        return Err(());
    }
    Ok(None)
}

/// Position of a crossing along an edge; the flag orders a point just
/// beyond the level after the level itself.
type Key = (Q, bool);

struct Drawn {
    from: usize,
    to: usize,
    kind: EdgeKind,
    a: Pt,
    b: Pt,
    side: i128,
}

pub fn build_double_prime(phi: &RectilinearFormula) -> Result<EmbeddedGraph> {
    phi.validate()?;
    let mut b = GraphBuilder::new(0);
    let mut coords = Vec::new();
    let mut kinds = BTreeMap::new();
    let mut add_edge = |b: &mut GraphBuilder, u: usize, v: usize, k: EdgeKind| -> Result<()> {
        b.add_edge(u, v)?;
        kinds.insert((u.min(v), u.max(v)), k);
        Ok(())
    };

    // appearances per variable, split by sign, in attachment order
    let mut pos: Vec<Vec<(i64, usize, usize)>> = vec![Vec::new(); phi.variables.len()];
    let mut neg = pos.clone();
    let mut legs_sorted = Vec::new();
    for (j, c) in phi.clauses.iter().enumerate() {
        let mut legs = c.legs.clone();
        legs.sort_by_key(|l| l.x);
        for (q, l) in legs.iter().enumerate() {
            let i = phi.var_index(&l.var).expect("validated");
            match c.sign {
                Sign::Positive => pos[i].push((l.x, j, q)),
                Sign::Negative => neg[i].push((l.x, j, q)),
            }
        }
        legs_sorted.push(legs);
    }
    let mut attach: HashMap<(usize, usize), usize> = HashMap::new();
    let mut cycles = Vec::new();
    for (i, var) in phi.variables.iter().enumerate() {
        pos[i].sort();
        neg[i].sort_by(|a, b| b.cmp(a));
        let r = pos[i].len() + neg[i].len();
        let mut cyc = Vec::with_capacity(2 * r);
        for s in 1..=r {
            cyc.push(b.add_labeled(format!("var:{}:{s}", var.name)));
            cyc.push(b.add_labeled(format!("varbar:{}:{s}", var.name)));
            coords.push((var.x, 0));
            coords.push((var.x, 0));
        }
        if r >= 2 {
            for k in 0..2 * r {
                add_edge(&mut b, cyc[k], cyc[(k + 1) % (2 * r)], EdgeKind::Cycle)?;
            }
        } else if r == 1 {
            add_edge(&mut b, cyc[0], cyc[1], EdgeKind::Cycle)?;
        }
        // positive legs take x̄^1.. left to right, negative legs x^(p+1).. right to left
        for (s, &(x, j, q)) in pos[i].iter().enumerate() {
            attach.insert((j, q), cyc[2 * s + 1]);
            coords[cyc[2 * s + 1]] = (x, 0);
        }
        for (s, &(x, j, q)) in neg[i].iter().enumerate() {
            let v = cyc[2 * (pos[i].len() + s)];
            attach.insert((j, q), v);
            coords[v] = (x, 0);
        }
        cycles.push(cyc);
    }

    let y_plus = phi.clauses.iter().map(|c| c.y).filter(|&y| y > 0).max().unwrap_or(0) + 1;
    let y_minus = phi.clauses.iter().map(|c| c.y).filter(|&y| y < 0).min().unwrap_or(0) - 1;
    let mut triangles = Vec::new();
    let mut pendants = Vec::new();
    for (j, c) in phi.clauses.iter().enumerate() {
        let mut t = [0; 3];
        for (q, l) in legs_sorted[j].iter().enumerate() {
            t[q] = b.add_labeled(format!("clause{j}:v{}", q + 1));
            coords.push((l.x, c.y));
            add_edge(&mut b, t[q], attach[&(j, q)], EdgeKind::Leg)?;
        }
        add_edge(&mut b, t[0], t[1], EdgeKind::TEdge)?;
        add_edge(&mut b, t[1], t[2], EdgeKind::TEdge)?;
        add_edge(&mut b, t[0], t[2], EdgeKind::Curve)?;
        let p = b.add_labeled(format!("pi:{j}"));
        coords.push((legs_sorted[j][1].x, if c.sign == Sign::Positive { y_plus } else { y_minus }));
        for &v in &t {
            add_edge(&mut b, v, p, EdgeKind::Pendant)?;
        }
        triangles.push(t);
        pendants.push(p);
    }
    let graph = b.build()?;

    let pt = |v: usize| (coords[v].0 as i128, coords[v].1 as i128);
    let mut drawn = Vec::new();
    for (j, c) in phi.clauses.iter().enumerate() {
        let t = triangles[j];
        let side = c.y.signum() as i128;
        let d = |from, to, kind| Drawn { from, to, kind, a: pt(from), b: pt(to), side };
        for q in 0..3 {
            drawn.push(d(t[q], pendants[j], EdgeKind::Pendant));
            let leg_end = attach[&(j, q)];
            drawn.push(Drawn { from: leg_end, to: t[q], kind: EdgeKind::Leg, a: (pt(t[q]).0, 0), b: pt(t[q]), side });
        }
        drawn.push(d(t[0], t[1], EdgeKind::TEdge));
        drawn.push(d(t[1], t[2], EdgeKind::TEdge));
        drawn.push(d(t[0], t[2], EdgeKind::Curve));
    }

    let degenerate = |e: &Drawn, f: &Drawn| {
        Error::DegenerateGeometry(format!("edges {}-{} and {}-{} touch", e.from, e.to, f.from, f.to))
    };
    // Per edge index: (key, crossing id)
    let mut stops: Vec<Vec<(Key, usize)>> = (0..drawn.len()).map(|_| Vec::new()).collect();
    let mut crossings = Vec::new();
    let mut records = Vec::new();
    for i in 0..drawn.len() {
        for k in i + 1..drawn.len() {
            let (e, f) = (&drawn[i], &drawn[k]);
            if e.side != f.side || [e.from, e.to].iter().any(|v| *v == f.from || *v == f.to) {
                continue;
            }
            // put the pendant (if any) first
            let (pi, oi) = if e.kind == EdgeKind::Pendant { (i, k) } else { (k, i) };
            let (p, o) = (&drawn[pi], &drawn[oi]);
            let hit: Option<(Key, Key)> = match (p.kind, o.kind) {
                (EdgeKind::Pendant, EdgeKind::Curve) => {
                    // the curve runs at level y + side*eps over the open span
                    let (l, r, y) = (o.a.0, o.b.0, o.a.1);
                    let (py, qy) = (p.a.1, p.b.1);
                    let inside = (y - py) * p.side >= 0 && (qy - y) * p.side > 0;
                    if !inside {
                        None
                    } else {
                        let t = Q::new(y - py, qy - py);
                        let x = Q::from_integer(p.a.0) + t * Q::from_integer(p.b.0 - p.a.0);
                        let (lq, rq) = (Q::from_integer(l), Q::from_integer(r));
                        if x == lq || x == rq {
                            return Err(degenerate(p, o));
                        }
                        (lq < x && x < rq).then_some(((t, true), (x, false)))
                    }
                }
                (EdgeKind::Pendant, EdgeKind::TEdge | EdgeKind::Pendant) => {
                    match crossing_param(p.a, p.b, o.a, o.b).map_err(|_| degenerate(p, o))? {
                        None => None,
                        Some(t) => {
                            let s = if o.kind == EdgeKind::Pendant {
                                crossing_param(o.a, o.b, p.a, p.b).map_err(|_| degenerate(p, o))?.expect("symmetric")
                            } else {
                                Q::from_integer(p.a.0) + t * Q::from_integer(p.b.0 - p.a.0)
                            };
                            Some(((t, false), (s, false)))
                        }
                    }
                }
                _ if e.kind == EdgeKind::Leg || f.kind == EdgeKind::Leg => {
                    let crosses = if o.kind == EdgeKind::Curve || p.kind == EdgeKind::Curve {
                        let (leg, cur) = if e.kind == EdgeKind::Leg { (e, f) } else { (f, e) };
                        let x = leg.a.0;
                        cur.a.0 < x && x < cur.b.0 && leg.b.1.abs() > cur.a.1.abs()
                    } else {
                        crossing_param(e.a, e.b, f.a, f.b).map_err(|_| degenerate(e, f))?.is_some()
                    };
                    if crosses {
                        return Err(Error::DegenerateGeometry(format!(
                            "leg {}-{} crosses edge {}-{}",
                            e.from, e.to, f.from, f.to
                        )));
                    }
                    None
                }
                _ => None,
            };
            if let Some((kp, ko)) = hit {
                let id = crossings.len();
                let (pe, oe) = ((p.from, p.to), (o.from, o.to));
                let kind = if o.kind == EdgeKind::Pendant { CrossingType::B } else { CrossingType::A };
                // x on the pendant edge; between two pendants, the earlier clause's
                crossings.push(if kind == CrossingType::B && pi > oi {
                    Crossing { x_edge: oe, y_edge: pe }
                } else {
                    Crossing { x_edge: pe, y_edge: oe }
                });
                records.push(CrossingRecord { kind, pendant: pe, other: oe });
                stops[pi].push((kp, id));
                stops[oi].push((ko, id));
            }
        }
    }
    let mut plan = CrossingPlan { crossings, chains: Vec::new() };
    for (i, mut s) in stops.into_iter().enumerate() {
        if s.is_empty() {
            continue;
        }
        s.sort_by_key(|a| a.0);
        if let Some(w) = s.windows(2).find(|w| w[0].0.cmp(&w[1].0) == Ordering::Equal) {
            return Err(Error::DegenerateGeometry(format!(
                "crossings {} and {} meet edge {}-{} at the same point",
                w[0].1, w[1].1, drawn[i].from, drawn[i].to
            )));
        }
        plan.chains.push(EdgeChain {
            from: drawn[i].from,
            to: drawn[i].to,
            stops: s.into_iter().map(|x| x.1).collect(),
        });
    }
    Ok(EmbeddedGraph { graph, coords, edge_kinds: kinds, crossings: records, plan, triangles, pendants, cycles })
}

/// The full pipeline: crossings replaced by gadgets, optionally T3, then the
/// cycle `z_1, z̄_1, ..., z_m, z̄_m` with `z_j` joined to the pendant of
/// clause `j` (to the lowest path vertex of degree at most 2 after T3).
pub fn build_g_phi(phi: &RectilinearFormula, apply_t3: bool) -> Result<(Graph, TransformCertificate)> {
    let emb = build_double_prime(phi)?;
    let (gplus, _) = replace_crossings_plan(&emb.graph, &emb.plan)?;
    let (base, images): (Graph, Vec<Vec<usize>>) = if apply_t3 {
        let (g3, c3) = t3_degree_reduce(&gplus, None)?;
        (g3, c3.vertex_map)
    } else {
        let maps = (0..gplus.n()).map(|v| vec![v]).collect();
        (gplus, maps)
    };
    let m = phi.clauses.len();
    let mut b = GraphBuilder::from_graph(&base);
    let mut z = Vec::with_capacity(m);
    let mut zbar = Vec::with_capacity(m);
    for j in 0..m {
        z.push(b.add_labeled(format!("z:{j}")));
        zbar.push(b.add_labeled(format!("zbar:{j}")));
    }
    let ring: Vec<usize> = z.iter().zip(&zbar).flat_map(|(&a, &c)| [a, c]).collect();
    if m == 1 {
        b.add_edge(ring[0], ring[1])?;
    } else {
        for k in 0..ring.len() {
            b.add_edge(ring[k], ring[(k + 1) % ring.len()])?;
        }
    }
    let mut cert = TransformCertificate {
        transform: "reduce-3sat".into(),
        vertex_map: (0..emb.graph.n()).map(|v| images[v].clone()).collect(),
        ..Default::default()
    };
    for (j, &p) in emb.pendants.iter().enumerate() {
        let target = *images[p]
            .iter()
            .find(|&&w| !apply_t3 || base.degree(w) <= 2)
            .ok_or_else(|| Error::InvalidArgument(format!("no free vertex on the path of pendant {j}")))?;
        b.add_edge(z[j], target)?;
        cert.groups.insert(format!("pendant:{j}"), images[p].clone());
    }
    cert.params.insert("m".into(), m as i64);
    cert.params.insert("lambda".into(), emb.plan.crossings.len() as i64);
    cert.params.insert("t3".into(), apply_t3 as i64);
    cert.groups.insert("z".into(), z);
    cert.groups.insert("zbar".into(), zbar);
    Ok((b.build()?, cert))
}
