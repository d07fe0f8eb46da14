//! Unit disk realizations of graphs drawn orthogonally on the grid.
//!
//! Given a drawing in which every vertex sits on an integer point and every
//! edge is an axis-parallel polyline, [`to_unit_disk`] scales the drawing,
//! puts a disk on every vertex and every turn, and fills each straight run
//! with evenly spaced disks. Every edge gets a positive even number of new
//! vertices, so the result is an even subdivision of the input and keeps
//! its 1-extendability. Disks have radius 1; two disks touch when their
//! centers are at distance at most 2.
//!
//! ```
//! use oneext::Graph;
//! use oneext::unitdisk::{intersection_graph, to_unit_disk, OrthogonalEmbedding};
//!
//! let k2 = Graph::path(2);
//! let emb: OrthogonalEmbedding = serde_json::from_str(
//!     r#"{"vertices":[{"id":0,"x":0,"y":0},{"id":1,"x":4,"y":0}],
//!         "edges":[{"u":0,"v":1,"bends":[]}]}"#,
//! ).unwrap();
//! let (sub, layout, _) = to_unit_disk(&k2, &emb).unwrap();
//! assert_eq!(sub.n() % 2, 0);
//! assert_eq!(intersection_graph(&layout).edges(), sub.edges());
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::transforms::TransformCertificate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedVertex {
    pub id: usize,
    pub x: i64,
    pub y: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddedEdge {
    pub u: usize,
    pub v: usize,
    /// Turn points from `u` to `v`.
    #[serde(default)]
    pub bends: Vec<[i64; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalEmbedding {
    pub vertices: Vec<EmbeddedVertex>,
    pub edges: Vec<EmbeddedEdge>,
}

type Point = (i64, i64);

#[derive(Clone, Copy, Debug)]
struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    fn lo(&self) -> Point {
        (self.a.0.min(self.b.0), self.a.1.min(self.b.1))
    }

    fn hi(&self) -> Point {
        (self.a.0.max(self.b.0), self.a.1.max(self.b.1))
    }

    fn len(&self) -> i64 {
        (self.a.0 - self.b.0).abs() + (self.a.1 - self.b.1).abs()
    }

    /// Intersection as a box, if nonempty. Axis-parallel segments meet in a
    /// point or a sub-segment.
    fn meet(&self, o: &Segment) -> Option<(Point, Point)> {
        let (l1, h1, l2, h2) = (self.lo(), self.hi(), o.lo(), o.hi());
        let lo = (l1.0.max(l2.0), l1.1.max(l2.1));
        let hi = (h1.0.min(h2.0), h1.1.min(h2.1));
        (lo.0 <= hi.0 && lo.1 <= hi.1).then_some((lo, hi))
    }

    fn contains(&self, p: Point) -> bool {
        let (l, h) = (self.lo(), self.hi());
        l.0 <= p.0 && p.0 <= h.0 && l.1 <= p.1 && p.1 <= h.1
    }
}

impl OrthogonalEmbedding {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Checks the drawing against `g` and returns, for each edge of `g` in
    /// ascending order, its polyline from the smaller endpoint.
    pub fn validate(&self, g: &Graph) -> Result<Vec<Vec<Point>>> {
        let bad = |msg: String| Err(Error::InvalidEmbedding(msg));
        if self.vertices.len() != g.n() {
            return bad(format!("{} vertices drawn, graph has {}", self.vertices.len(), g.n()));
        }
        if g.max_degree() > 4 {
            return bad(format!("max degree {} exceeds 4", g.max_degree()));
        }
        let mut pos: Vec<Option<Point>> = vec![None; g.n()];
        for v in &self.vertices {
            match pos.get_mut(v.id) {
                Some(slot @ None) => *slot = Some((v.x, v.y)),
                Some(Some(_)) => return bad(format!("vertex {} drawn twice", v.id)),
                None => return bad(format!("vertex {} out of range", v.id)),
            }
        }
        let pos: Vec<Point> = pos.into_iter().map(|p| p.expect("all ids seen")).collect();
        for u in 0..g.n() {
            if let Some(v) = (u + 1..g.n()).find(|&v| pos[v] == pos[u]) {
                return bad(format!("vertices {u} and {v} share a point"));
            }
        }
        let mut lines: BTreeMap<(usize, usize), Vec<Point>> = BTreeMap::new();
        for e in &self.edges {
            if e.u >= g.n() || e.v >= g.n() || !g.has_edge(e.u, e.v) {
                return bad(format!("edge {}-{} is not in the graph", e.u, e.v));
            }
            let mut pts = vec![pos[e.u]];
            pts.extend(e.bends.iter().map(|b| (b[0], b[1])));
            pts.push(pos[e.v]);
            let key = (e.u.min(e.v), e.u.max(e.v));
            if e.u > e.v {
                pts.reverse();
            }
            if lines.insert(key, pts).is_some() {
                return bad(format!("edge {}-{} drawn twice", key.0, key.1));
            }
        }
        if lines.len() != g.m() {
            return bad(format!("{} edges drawn, graph has {}", lines.len(), g.m()));
        }
        let mut segs: Vec<(usize, usize, Segment)> = Vec::new();
        for (ei, ((u, v), pts)) in lines.iter().enumerate() {
            for (si, w) in pts.windows(2).enumerate() {
                let s = Segment { a: w[0], b: w[1] };
                if s.a.0 != s.b.0 && s.a.1 != s.b.1 {
                    return bad(format!("edge {u}-{v}: segment {:?}-{:?} is not axis-parallel", s.a, s.b));
                }
                if s.len() == 0 {
                    return bad(format!("edge {u}-{v}: zero-length segment at {:?}", s.a));
                }
                segs.push((ei, si, s));
            }
        }
        let keys: Vec<(usize, usize)> = lines.keys().copied().collect();
        let last_seg: Vec<usize> = lines.values().map(|p| p.len() - 2).collect();
        for (i, &(e1, s1, a)) in segs.iter().enumerate() {
            for &(e2, s2, b) in &segs[i + 1..] {
                let Some((lo, hi)) = a.meet(&b) else { continue };
                let point = (lo == hi).then_some(lo);
                let ok = if e1 == e2 {
                    s2 == s1 + 1 && point == Some(a.b)
                } else {
                    // touching is allowed only at a shared endpoint
                    let (k1, k2) = (keys[e1], keys[e2]);
                    let end1 = |w: usize| (w == k1.0 && s1 == 0) || (w == k1.1 && s1 == last_seg[e1]);
                    let end2 = |w: usize| (w == k2.0 && s2 == 0) || (w == k2.1 && s2 == last_seg[e2]);
                    [k1.0, k1.1]
                        .into_iter()
                        .any(|w| (w == k2.0 || w == k2.1) && point == Some(pos[w]) && end1(w) && end2(w))
                };
                if !ok {
                    return bad(format!(
                        "edges {}-{} and {}-{} overlap near {:?}",
                        keys[e1].0, keys[e1].1, keys[e2].0, keys[e2].1, lo
                    ));
                }
            }
        }
        for &(e, _, s) in &segs {
            let (u, v) = keys[e];
            if let Some(w) = (0..g.n()).find(|&w| w != u && w != v && s.contains(pos[w])) {
                return bad(format!("edge {u}-{v} passes through vertex {w}"));
            }
        }
        Ok(lines.into_values().collect())
    }
}

/// Disk centers; every disk has radius 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiskLayout {
    pub centers: Vec<(BigRational, BigRational)>,
}

#[derive(Serialize, Deserialize)]
struct RawLayout {
    radius: String,
    centers: Vec<[String; 2]>,
}

impl Serialize for DiskLayout {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        RawLayout {
            radius: "1".into(),
            centers: self.centers.iter().map(|(x, y)| [x.to_string(), y.to_string()]).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for DiskLayout {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawLayout::deserialize(de)?;
        if raw.radius != "1" {
            return Err(D::Error::custom(format!("radius must be 1, got {}", raw.radius)));
        }
        let q = |s: &str| BigRational::from_str(s).map_err(|_| D::Error::custom(format!("bad coordinate {s:?}")));
        let centers = raw.centers.iter().map(|[x, y]| Ok((q(x)?, q(y)?))).collect::<std::result::Result<_, _>>()?;
        Ok(DiskLayout { centers })
    }
}

/// Graph with an edge between every two disks that meet (center distance at
/// most 2, tangency included).
pub fn intersection_graph(layout: &DiskLayout) -> Graph {
    let four = BigRational::from_integer(4.into());
    let c = &layout.centers;
    let mut b = GraphBuilder::new(c.len());
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let dx = &c[i].0 - &c[j].0;
            let dy = &c[i].1 - &c[j].1;
            if &dx * &dx + &dy * &dy <= four {
                b.add_edge(i, j).expect("distinct ids");
            }
        }
    }
    b.build().expect("no labels")
}

/// Does `layout` realize `g` with the identity vertex map?
pub fn verify_disks(g: &Graph, layout: &DiskLayout) -> bool {
    layout.centers.len() == g.n() && intersection_graph(layout).edges() == g.edges()
}

const MAX_SCALE: i64 = 64;

/// Even subdivision of `g` realized by unit disks, following `emb`.
///
/// The drawing is scaled by the smallest factor for which the placement
/// below is a faithful realization. Input vertices keep their ids; the new
/// vertices of edge `u-v` follow in edge order, from `u` to `v`, and are
/// listed in certificate group `edge:u-v`.
pub fn to_unit_disk(g: &Graph, emb: &OrthogonalEmbedding) -> Result<(Graph, DiskLayout, TransformCertificate)> {
    let lines = emb.validate(g)?;
    let mut pos = vec![(0, 0); g.n()];
    for v in &emb.vertices {
        pos[v.id] = (v.x, v.y);
    }
    for scale in 1..=MAX_SCALE {
        let (sub, layout, cert) = place(g, &pos, &lines, scale)?;
        if verify_disks(&sub, &layout) {
            return Ok((sub, layout, cert));
        }
    }
    Err(Error::DegenerateGeometry(format!("no realization found up to scale {MAX_SCALE}")))
}

fn place(
    g: &Graph,
    pos: &[Point],
    lines: &[Vec<Point>],
    scale: i64,
) -> Result<(Graph, DiskLayout, TransformCertificate)> {
    let q = |v: i64| BigRational::from_integer(BigInt::from(v * scale));
    let mut centers: Vec<(BigRational, BigRational)> = pos.iter().map(|&(x, y)| (q(x), q(y))).collect();
    let mut b = GraphBuilder::new(g.n());
    for (v, l) in g.labels().iter().enumerate() {
        if let Some(l) = l {
            b.set_label(v, l.clone())?;
        }
    }
    let mut cert = TransformCertificate::new("unitdisk", g).param("scale", scale);
    for ((u, v), pts) in g.edges().into_iter().zip(lines) {
        // steps per segment: as few as keep each step at most 2 long
        let lens: Vec<i64> = pts.windows(2).map(|w| scale * Segment { a: w[0], b: w[1] }.len()).collect();
        let mut steps: Vec<i64> = lens.iter().map(|&l| (l + 1) / 2).collect();
        let internal: i64 = steps.iter().sum::<i64>() - 1;
        let longest = (0..lens.len()).max_by_key(|&i| (lens[i], std::cmp::Reverse(i))).expect("an edge has a segment");
        // an even number of new vertices, and at least two
        if internal == 0 {
            steps[longest] += 2;
        } else if internal % 2 == 1 {
            steps[longest] += 1;
        }
        let mut chain = Vec::new();
        let mut prev = u;
        for (si, w) in pts.windows(2).enumerate() {
            let (a, bb) = (w[0], w[1]);
            for i in 1..=steps[si] {
                let last = si + 1 == steps.len() && i == steps[si];
                if last {
                    break;
                }
                let t = BigRational::new(BigInt::from(i), BigInt::from(steps[si]));
                let x = q(a.0) + (q(bb.0) - q(a.0)) * &t;
                let y = q(a.1) + (q(bb.1) - q(a.1)) * &t;
                let id = b.add_labeled(format!(
                    "sub:{}-{}:{}",
                    crate::transforms::label_of(g, u),
                    crate::transforms::label_of(g, v),
                    chain.len() + 1
                ));
                centers.push((x, y));
                b.add_edge(prev, id)?;
                chain.push(id);
                prev = id;
            }
        }
        b.add_edge(prev, v)?;
        cert.groups.insert(format!("edge:{u}-{v}"), chain);
    }
    Ok((b.build()?, DiskLayout { centers }, cert))
}
