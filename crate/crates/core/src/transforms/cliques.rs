use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

use super::{label_of, TransformCertificate};

/// Checks that `parts` partitions `V(G)` into nonempty cliques.
pub fn validate_clique_partition(g: &Graph, parts: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidPartition(format!("part {i} is empty")));
        }
        for &v in part {
            if v >= g.n() {
                return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
        }
        if !g.is_clique(part) {
            return Err(Error::InvalidPartition(format!("part {i} is not a clique")));
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
    }
    Ok(())
}

/// Two copies of `G` (ids `v` and `n + v`, labels `copy1:v`, `copy2:v`),
/// plus `pi1:j` and `pi2:j` for each clique `C_j`: `pi<i>:j` sees all of
/// `C_j` in copy `i`, and every `pi1` sees every `pi2`.
pub fn gap_construction(g: &Graph, parts: &[Vec<usize>]) -> Result<(Graph, TransformCertificate)> {
    validate_clique_partition(g, parts)?;
    let n = g.n();
    let mut b = GraphBuilder::new(0);
    let mut cert = TransformCertificate::new("gap", g).param("k", parts.len() as i64);
    for copy in 1..=2 {
        for v in 0..n {
            b.add_labeled(format!("copy{copy}:{}", label_of(g, v)));
        }
    }
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
        b.add_edge(u + n, v + n)?;
    }
    let mut p = [Vec::new(), Vec::new()];
    for (i, pi) in p.iter_mut().enumerate() {
        for (j, part) in parts.iter().enumerate() {
            let w = b.add_labeled(format!("pi{}:{j}", i + 1));
            for &v in part {
                b.add_edge(w, v + i * n)?;
            }
            pi.push(w);
        }
    }
    for &a in &p[0] {
        for &c in &p[1] {
            b.add_edge(a, c)?;
        }
    }
    for v in 0..n {
        cert.vertex_map[v].push(v + n);
    }
    let [p1, p2] = p;
    cert.groups.insert("P1".into(), p1);
    cert.groups.insert("P2".into(), p2);
    Ok((b.build()?, cert))
}

/// Adds `pi:i` adjacent to all of `C_i`, `omega` adjacent to every `pi:i`,
/// and `pi:omega` adjacent to `omega` only.
pub fn w1_construction(g: &Graph, parts: &[Vec<usize>]) -> Result<(Graph, TransformCertificate)> {
    validate_clique_partition(g, parts)?;
    let mut b = GraphBuilder::from_graph(g);
    let mut cert = TransformCertificate::new("w1", g).param("k", parts.len() as i64);
    let mut pis = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let w = b.add_labeled(format!("pi:{i}"));
        for &v in part {
            b.add_edge(w, v)?;
        }
        pis.push(w);
    }
    let omega = b.add_labeled("omega");
    for &w in &pis {
        b.add_edge(w, omega)?;
    }
    let pi_omega = b.add_labeled("pi:omega");
    b.add_edge(omega, pi_omega)?;
    cert.groups.insert("pi".into(), pis);
    cert.groups.insert("omega".into(), vec![omega, pi_omega]);
    Ok((b.build()?, cert))
}
