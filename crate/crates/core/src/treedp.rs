//! Maximum independent set by dynamic programming along an elimination
//! order. Cost is exponential only in the order's width.

use crate::error::Result;
use crate::graph::Graph;
use crate::mis::Budget;
use crate::set::VertexSet;

/// Elimination order of `G[within]` and, per eliminated vertex, its later
/// neighbors in the filled graph.
#[derive(Debug)]
pub(crate) struct Elimination {
    order: Vec<usize>,
    higher: Vec<Vec<usize>>,
}

impl Elimination {
    pub(crate) fn width(&self) -> usize {
        self.higher.iter().map(Vec::len).max().unwrap_or(0)
    }
}

fn restricted_adjacency(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    (0..g.n())
        .map(|v| if within.contains(v) { g.neighbors(v).intersection(within) } else { VertexSet::new(g.n()) })
        .collect()
}

/// Turns the neighbourhood of `v` into a clique and drops `v`.
fn eliminate(adj: &mut [VertexSet], v: usize) -> Vec<usize> {
    let nb = adj[v].to_vec();
    for &a in &nb {
        adj[a].remove(v);
        for &b in &nb {
            if a != b {
                adj[a].insert(b);
            }
        }
    }
    adj[v] = VertexSet::new(adj.len());
    nb
}

fn fill_in(adj: &[VertexSet], v: usize) -> usize {
    let nb = &adj[v];
    let missing: usize = nb.iter().map(|a| nb.len() - 1 - adj[a].intersection_len(nb)).sum();
    missing / 2
}

/// Order picking a vertex of least degree (lowest id on ties). Gives up
/// once some vertex has more than `max_width` later neighbours.
pub(crate) fn min_degree_order(g: &Graph, within: &VertexSet, max_width: usize) -> Option<Elimination> {
    let mut adj = restricted_adjacency(g, within);
    let mut left = within.clone();
    let mut order = Vec::with_capacity(left.len());
    let mut higher = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let v = left.iter().min_by_key(|&v| (adj[v].len(), v)).expect("nonempty");
        if adj[v].len() > max_width {
            return None;
        }
        left.remove(v);
        order.push(v);
        higher.push(eliminate(&mut adj, v));
    }
    Some(Elimination { order, higher })
}

/// Order picking a vertex whose elimination adds the fewest edges, then
/// least degree, then lowest id.
pub(crate) fn min_fill_order(g: &Graph, within: &VertexSet, max_width: usize) -> Option<Elimination> {
    let n = g.n();
    let mut adj = restricted_adjacency(g, within);
    let mut left = within.clone();
    let mut fill: Vec<usize> = (0..n).map(|v| if left.contains(v) { fill_in(&adj, v) } else { 0 }).collect();
    let mut order = Vec::with_capacity(left.len());
    let mut higher = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let v = left.iter().min_by_key(|&v| (fill[v], adj[v].len(), v)).expect("nonempty");
        if adj[v].len() > max_width {
            return None;
        }
        left.remove(v);
        let nb = eliminate(&mut adj, v);
        // fill counts change only within distance two of v
        let mut touched = VertexSet::new(n);
        for &a in &nb {
            touched.insert(a);
            touched.union_with(&adj[a]);
        }
        for w in &touched {
            fill[w] = fill_in(&adj, w);
        }
        order.push(v);
        higher.push(nb);
    }
    Some(Elimination { order, higher })
}

impl Elimination {
    /// The same order restricted to `within`. Its width is at most the width
    /// of `self`.
    pub(crate) fn restrict(&self, g: &Graph, within: &VertexSet) -> Elimination {
        let mut adj = restricted_adjacency(g, within);
        let mut order = Vec::with_capacity(within.len());
        let mut higher = Vec::with_capacity(within.len());
        for &v in self.order.iter().filter(|&&v| within.contains(v)) {
            order.push(v);
            higher.push(eliminate(&mut adj, v));
        }
        Elimination { order, higher }
    }
}

/// Maximum independent set of the graph eliminated by `elim`.
pub(crate) fn solve(g: &Graph, elim: &Elimination, budget: &Budget) -> Result<VertexSet> {
    let n = g.n();
    let k = elim.order.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in elim.order.iter().enumerate() {
        pos[v] = i;
    }
    // parent = earliest-eliminated member of the higher set
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..k {
        if let Some(p) = elim.higher[i].iter().map(|&w| pos[w]).min() {
            children[p].push(i);
        }
    }
    let mut tables: Vec<Vec<u32>> = vec![Vec::new(); k];
    let mut choice: Vec<Vec<u64>> = vec![Vec::new(); k];
    let mut index: Vec<Vec<u32>> = Vec::new();
    for i in 0..k {
        let v = elim.order[i];
        let h = &elim.higher[i];
        let size = 1usize << h.len();
        budget.charge(size as u64)?;
        let blocked_mask: usize = h.iter().enumerate().filter(|(_, &w)| g.has_edge(v, w)).map(|(b, _)| 1 << b).sum();
        // a child's scope is a subset of h plus v; idx[a] is the child's
        // table index for assignment a of h with v absent
        index.resize_with(children[i].len(), Vec::new);
        let mut v_bits = Vec::with_capacity(children[i].len());
        for (slot, &c) in children[i].iter().enumerate() {
            let mut contrib = vec![0u32; h.len()];
            let mut vb = 0u32;
            for (bit, &w) in elim.higher[c].iter().enumerate() {
                match h.iter().position(|&x| x == w) {
                    Some(b) => contrib[b] = 1 << bit,
                    None => vb = 1 << bit,
                }
            }
            let idx = &mut index[slot];
            idx.clear();
            idx.resize(size, 0);
            for a in 1..size {
                idx[a] = idx[a & (a - 1)] | contrib[a.trailing_zeros() as usize];
            }
            v_bits.push(vb);
        }
        let mut table = vec![0u32; size];
        let mut pick = vec![0u64; size.div_ceil(64)];
        for a in 0..size {
            let (mut out, mut inn) = (0u32, 1u32);
            for (slot, &c) in children[i].iter().enumerate() {
                let t = &tables[c];
                let j = index[slot][a] as usize;
                out += t[j];
                inn += t[j | v_bits[slot] as usize];
            }
            if a & blocked_mask == 0 && inn >= out {
                table[a] = inn;
                pick[a / 64] |= 1 << (a % 64);
            } else {
                table[a] = out;
            }
        }
        tables[i] = table;
        choice[i] = pick;
        for &c in &children[i] {
            tables[c] = Vec::new();
        }
    }
    let mut out = VertexSet::new(n);
    for i in (0..k).rev() {
        let v = elim.order[i];
        let a: usize = elim.higher[i].iter().enumerate().filter(|(_, &w)| out.contains(w)).map(|(b, _)| 1 << b).sum();
        if choice[i][a / 64] >> (a % 64) & 1 == 1 {
            out.insert(v);
        }
    }
    Ok(out)
}
