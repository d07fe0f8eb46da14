use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::set::VertexSet;

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Vec<Option<String>>,
}

/// Incremental construction of a [`Graph`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { adj: vec![Vec::new(); n], labels: vec![None; n] }
    }

    /// Starts from a copy of `g`, labels included.
    pub fn from_graph(g: &Graph) -> Self {
        let mut b = GraphBuilder::new(g.n());
        b.labels = g.labels.clone();
        for (u, v) in g.edges() {
            b.adj[u].push(v);
            b.adj[v].push(u);
        }
        b
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_vertex(&mut self, label: Option<String>) -> usize {
        self.adj.push(Vec::new());
        self.labels.push(label);
        self.adj.len() - 1
    }

    pub fn add_labeled(&mut self, label: impl Into<String>) -> usize {
        self.add_vertex(Some(label.into()))
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        self.check(v)?;
        self.labels[v] = Some(label.into());
        Ok(())
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.adj.len() {
            return Err(Error::VertexOutOfRange { v, n: self.adj.len() });
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        Ok(())
    }

    /// Adds the edge `uv`; repeated edges are collapsed at build time.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn build(self) -> Result<Graph> {
        let n = self.adj.len();
        let mut seen = HashMap::new();
        for l in self.labels.iter().flatten() {
            if seen.insert(l.as_str(), ()).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let adj = self.adj.into_iter().map(|nb| VertexSet::from_iter_in(n, nb)).collect();
        Ok(Graph { adj, labels: self.labels })
    }
}

impl Graph {
    /// Builds a graph from an edge list, without labels.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        b.build()
    }

    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build().expect("no labels")
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("valid clique")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn find_label(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_deref() == Some(name))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { v, n: self.n() });
        }
        Ok(())
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(Error::VertexOutOfRange { v, n: self.n() }),
            None if s.universe() != self.n() => Err(Error::InvalidArgument(format!(
                "vertex set over universe {} used with graph on {} vertices",
                s.universe(),
                self.n()
            ))),
            None => Ok(()),
        }
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `V(G) \ N(v)`; contains `v` itself.
    pub fn non_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.vertex_set().difference(&self.adj[v]))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &[usize]) -> bool {
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Induced subgraph on `r`, relabelled in ascending order. Returns the
    /// new graph and the map from new ids to old ids.
    pub fn induced_subgraph(&self, r: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if let Some(v) = r.iter().find(|&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange { v, n: self.n() });
        }
        let old: Vec<usize> = r.iter().collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut b = GraphBuilder::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            if let Some(l) = &self.labels[v] {
                b.labels[i] = Some(l.clone());
            }
            for w in self.adj[v].iter().filter(|&w| w > v && r.contains(w)) {
                b.add_edge(i, new_id[w])?;
            }
        }
        Ok((b.build()?, old))
    }

    /// Induced subgraph on `V \ N[v]`.
    pub fn remove_closed_neighborhood(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        self.induced_subgraph(&self.vertex_set().difference(&self.closed_neighborhood(v)))
    }

    /// Connected components of `G[within]`, each as a vertex set, ordered by
    /// smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let mut comp = VertexSet::new(self.n());
            comp.insert(s);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new(self.n());
                for v in &frontier {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(within);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            left.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Repeatedly removes a minimum-degree vertex (lowest id on ties) from
    /// `G[within]`. Returns the removal order and the largest degree seen at
    /// removal time.
    pub fn degeneracy_order_within(&self, within: &VertexSet) -> (Vec<usize>, usize) {
        let mut left = within.clone();
        let mut deg: Vec<usize> =
            (0..self.n()).map(|v| if left.contains(v) { self.adj[v].intersection_len(&left) } else { 0 }).collect();
        let mut order = Vec::with_capacity(left.len());
        let mut d = 0;
        while !left.is_empty() {
            let v = left.iter().min_by_key(|&v| (deg[v], v)).expect("nonempty");
            d = d.max(deg[v]);
            order.push(v);
            left.remove(v);
            for w in self.adj[v].iter().filter(|&w| left.contains(w)) {
                deg[w] -= 1;
            }
        }
        (order, d)
    }

    pub fn degeneracy_order(&self) -> (Vec<usize>, usize) {
        self.degeneracy_order_within(&self.vertex_set())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.n();
        let mut b = GraphBuilder::new(off + other.n());
        for (v, l) in self.labels.iter().chain(&other.labels).enumerate() {
            b.labels[v] = l.clone();
        }
        for (u, v) in self.edges() {
            b.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            b.add_edge(u + off, v + off)?;
        }
        b.build()
    }

    /// Edge-list text: `n m`, one `u v` line per edge in ascending order,
    /// then `# label v name` lines.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        for (v, l) in self.labels.iter().enumerate() {
            if let Some(l) = l {
                writeln!(out, "# label {v} {l}").unwrap();
            }
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let err = |line: usize, msg: String| Error::Parse { line, msg };
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (hline, header) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .ok_or_else(|| err(1, "missing header line \"n m\"".into()))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parse_num = |s: &str, line: usize| -> Result<usize> {
            s.parse::<usize>().map_err(|_| err(line, format!("expected a non-negative integer, found {s:?}")))
        };
        if nums.len() != 2 {
            return Err(err(hline, format!("expected header \"n m\", found {header:?}")));
        }
        let n = parse_num(nums[0], hline)?;
        let m = parse_num(nums[1], hline)?;
        let mut b = GraphBuilder::new(n);
        let mut count = 0;
        let mut last_line = hline;
        for (line, l) in lines {
            last_line = line;
            if l.is_empty() {
                continue;
            }
            if let Some(rest) = l.strip_prefix('#') {
                let rest = rest.trim_start();
                if let Some(lab) = rest.strip_prefix("label") {
                    let lab = lab.trim_start();
                    let (id, name) = lab
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| err(line, "expected \"# label v name\"".into()))?;
                    let v = parse_num(id, line)?;
                    if v >= n {
                        return Err(err(line, format!("vertex {v} out of range for n = {n}")));
                    }
                    b.labels[v] = Some(name.trim().to_string());
                }
                continue;
            }
            let parts: Vec<&str> = l.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(err(line, format!("expected edge \"u v\", found {l:?}")));
            }
            let u = parse_num(parts[0], line)?;
            let v = parse_num(parts[1], line)?;
            for x in [u, v] {
                if x >= n {
                    return Err(err(line, format!("vertex {x} out of range for n = {n}")));
                }
            }
            if u == v {
                return Err(err(line, format!("self-loop on vertex {u}")));
            }
            b.add_edge(u, v)?;
            count += 1;
        }
        if count != m {
            return Err(err(last_line, format!("header declares {m} edges but {count} were listed")));
        }
        b.build().map_err(|e| match e {
            Error::DuplicateLabel(l) => err(last_line, format!("duplicate label {l:?}")),
            e => e,
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl std::str::FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        Graph::parse_edge_list(s)
    }
}
