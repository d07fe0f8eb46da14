use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

use super::{label_of, TransformCertificate};

/// Adds a pendant vertex `pendant:u` to every vertex `u`. Pendant of `u` has
/// id `n + u`.
pub fn t1_pendant(g: &Graph) -> Result<(Graph, TransformCertificate)> {
    let n = g.n();
    let mut b = GraphBuilder::from_graph(g);
    let mut cert = TransformCertificate::new("t1", g);
    for u in 0..n {
        let p = b.add_labeled(format!("pendant:{}", label_of(g, u)));
        b.add_edge(u, p)?;
        cert.vertex_map[u].push(p);
    }
    Ok((b.build()?, cert))
}

/// Replaces every edge by a path with `2s` internal vertices, labelled
/// `sub:u-v:i` for `i` in `1..=2s` counted from `u`.
pub fn t2_subdivide(g: &Graph, s: usize) -> Result<(Graph, TransformCertificate)> {
    if s == 0 {
        return Err(Error::InvalidArgument("t2 needs s >= 1".into()));
    }
    let mut b = GraphBuilder::new(g.n());
    for (v, l) in g.labels().iter().enumerate() {
        if let Some(l) = l {
            b.set_label(v, l.clone())?;
        }
    }
    let mut cert = TransformCertificate::new("t2", g).param("s", s as i64);
    for (u, v) in g.edges() {
        let mut prev = u;
        let mut chain = Vec::with_capacity(2 * s);
        for i in 1..=2 * s {
            let w = b.add_labeled(format!("sub:{}-{}:{i}", label_of(g, u), label_of(g, v)));
            b.add_edge(prev, w)?;
            chain.push(w);
            prev = w;
        }
        b.add_edge(prev, v)?;
        cert.groups.insert(format!("edge:{u}-{v}"), chain);
    }
    Ok((b.build()?, cert))
}

/// Replaces every vertex `u` by an induced path `u_1..u_l` with
/// `l = 2Δ - 1` and hangs each neighbor of `u` on a distinct odd-position
/// path vertex. Neighbors are taken in `rotation[u]` order when given, else
/// in ascending id order. Path vertex `u_i` has id `u*l + i - 1` and label
/// `path:u:i`.
pub fn t3_degree_reduce(g: &Graph, rotation: Option<&[Vec<usize>]>) -> Result<(Graph, TransformCertificate)> {
    let n = g.n();
    let delta = g.max_degree();
    let len = if delta == 0 { 1 } else { 2 * delta - 1 };
    let mut order: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).to_vec()).collect();
    if let Some(rot) = rotation {
        if rot.len() != n {
            return Err(Error::InvalidArgument(format!("rotation lists {} vertices, graph has {n}", rot.len())));
        }
        for (u, r) in rot.iter().enumerate() {
            let mut sorted = r.clone();
            sorted.sort_unstable();
            if sorted != order[u] {
                return Err(Error::InvalidArgument(format!(
                    "rotation at vertex {u} is not a permutation of its neighbors"
                )));
            }
            order[u] = r.clone();
        }
    }
    let mut b = GraphBuilder::new(0);
    let mut cert = TransformCertificate::new("t3", g).param("delta", delta as i64).param("path_len", len as i64);
    for u in 0..n {
        let path: Vec<usize> = (1..=len).map(|i| b.add_labeled(format!("path:{}:{i}", label_of(g, u)))).collect();
        for w in path.windows(2) {
            b.add_edge(w[0], w[1])?;
        }
        cert.vertex_map[u] = path;
    }
    let slot = |u: usize, v: usize| order[u].iter().position(|&w| w == v).expect("neighbor");
    for (u, v) in g.edges() {
        b.add_edge(u * len + 2 * slot(u, v), v * len + 2 * slot(v, u))?;
    }
    Ok((b.build()?, cert))
}

/// Adds an independent set `S` of `n - r` vertices (`s:i`), a pendant
/// `pendant:v` on each original vertex, and all edges between `S` and the
/// pendants. For `r < n` the result is 1-extendable iff `α(G) = r`. At
/// `r = n` the set `S` is empty and the result is `t1_pendant(G)`, which is
/// always 1-extendable.
pub fn g_plus(g: &Graph, r: usize) -> Result<(Graph, TransformCertificate)> {
    let n = g.n();
    if r > n {
        return Err(Error::InvalidArgument(format!("r = {r} outside [0, {n}]")));
    }
    let mut b = GraphBuilder::from_graph(g);
    let mut cert = TransformCertificate::new("gplus", g).param("r", r as i64);
    let s: Vec<usize> = (0..n - r).map(|i| b.add_labeled(format!("s:{i}"))).collect();
    let mut t = Vec::with_capacity(n);
    for v in 0..n {
        let p = b.add_labeled(format!("pendant:{}", label_of(g, v)));
        b.add_edge(v, p)?;
        for &x in &s {
            b.add_edge(x, p)?;
        }
        cert.vertex_map[v].push(p);
        t.push(p);
    }
    cert.groups.insert("S".into(), s);
    cert.groups.insert("T".into(), t);
    Ok((b.build()?, cert))
}
