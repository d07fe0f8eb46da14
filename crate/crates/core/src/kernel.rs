//! Polynomial kernel for "does every vertex lie in an independent set of
//! size k?" on classes where large independent sets are easy to find.
//!
//! A class is (c, t)-friendly when every member on n vertices has an
//! independent set of size at least `t·n^c` that can be found in polynomial
//! time. [`FriendlyOracle`] packages such an extractor with its guarantee.
//!
//! ```
//! use oneext::Graph;
//! use oneext::kernel::{kernelize, FriendlyOracle};
//!
//! let g = Graph::cycle(30);
//! let oracle = FriendlyOracle::degenerate(&g);
//! let (small, trace) = kernelize(&g, 2, &oracle).unwrap();
//! assert!(small.n() < 30);
//! assert_eq!(trace.kept.len(), small.n());
//! ```

use num_integer::Roots;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FriendlyOracle {
    /// Greedy along the reverse of a min-degree elimination order. Finds at
    /// least `n/(d+1)` vertices on any graph of degeneracy at most `d`.
    Degenerate { d: usize },
    /// Ramsey recursion for graphs without a clique on `r` vertices. Finds
    /// at least `⌊n^(1/(r-1))⌋` vertices.
    KrFree { r: usize },
}

impl FriendlyOracle {
    /// Degenerate oracle tuned to the degeneracy of `g`.
    pub fn degenerate(g: &Graph) -> Self {
        FriendlyOracle::Degenerate { d: g.degeneracy_order().1 }
    }

    /// K_r-free oracle. Fails with the clique if `g` contains `K_r`.
    pub fn kr_free(g: &Graph, r: usize) -> Result<Self> {
        if r < 3 {
            return Err(Error::InvalidArgument(format!("r must be at least 3, got {r}")));
        }
        if let Some(c) = find_clique(g, r) {
            return Err(Error::CliqueFound(c));
        }
        Ok(FriendlyOracle::KrFree { r })
    }

    pub fn name(&self) -> String {
        match self {
            FriendlyOracle::Degenerate { d } => format!("degenerate(d={d})"),
            FriendlyOracle::KrFree { r } => format!("kr-free(r={r})"),
        }
    }

    /// Exponent `c` in the size guarantee `t·n^c`.
    pub fn c(&self) -> Ratio<usize> {
        match self {
            FriendlyOracle::Degenerate { .. } => Ratio::from_integer(1),
            FriendlyOracle::KrFree { r } => Ratio::new(1, r - 1),
        }
    }

    /// Multiplier `t` in the size guarantee `t·n^c`.
    pub fn t(&self) -> Ratio<usize> {
        match self {
            FriendlyOracle::Degenerate { d } => Ratio::new(1, d + 1),
            FriendlyOracle::KrFree { .. } => Ratio::from_integer(1),
        }
    }

    /// Smallest size the extractor promises on `n` vertices.
    pub fn guarantee(&self, n: usize) -> usize {
        match self {
            FriendlyOracle::Degenerate { d } => n.div_ceil(d + 1),
            FriendlyOracle::KrFree { r } => n.nth_root(*r as u32 - 1),
        }
    }

    /// `(k/t)^(1/c)`: graphs with fewer vertices are already kernels.
    pub fn threshold(&self, k: usize) -> usize {
        match self {
            FriendlyOracle::Degenerate { d } => k.saturating_mul(d + 1),
            FriendlyOracle::KrFree { r } => k.saturating_pow(*r as u32 - 1),
        }
    }

    /// Independent set of `G[within]` meeting the guarantee.
    pub fn extract(&self, g: &Graph, within: &VertexSet) -> Result<VertexSet> {
        g.check_set(within)?;
        let s = match self {
            FriendlyOracle::Degenerate { .. } => {
                let (order, _) = g.degeneracy_order_within(within);
                let mut s = VertexSet::new(g.n());
                for &v in order.iter().rev() {
                    if g.neighbors(v).is_disjoint(&s) {
                        s.insert(v);
                    }
                }
                s
            }
            FriendlyOracle::KrFree { r } => ramsey(g, within, *r),
        };
        if !g.is_independent(&s) || s.len() < self.guarantee(within.len()) {
            return Err(Error::OracleIntegrity(format!(
                "{} returned {} vertices on {} (promised {})",
                self.name(),
                s.len(),
                within.len(),
                self.guarantee(within.len())
            )));
        }
        Ok(s)
    }
}

/// Some clique of size `r`, lowest ids first.
pub fn find_clique(g: &Graph, r: usize) -> Option<Vec<usize>> {
    fn grow(g: &Graph, cur: &mut Vec<usize>, cand: VertexSet, r: usize) -> bool {
        if cur.len() == r {
            return true;
        }
        if cur.len() + cand.len() < r {
            return false;
        }
        for v in &cand {
            let next = VertexSet::from_iter_in(g.n(), cand.iter().filter(|&w| w > v)).intersection(g.neighbors(v));
            cur.push(v);
            if grow(g, cur, next, r) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::new();
    grow(g, &mut cur, g.vertex_set(), r).then_some(cur)
}

fn min_degree_greedy(g: &Graph, within: &VertexSet) -> VertexSet {
    let mut left = within.clone();
    let mut s = VertexSet::new(g.n());
    while !left.is_empty() {
        let v = left.iter().min_by_key(|&v| (g.neighbors(v).intersection_len(&left), v)).expect("nonempty");
        s.insert(v);
        left.difference_with(&g.closed_neighborhood(v));
    }
    s
}

// A vertex of degree D with D^(r-1) >= n^(r-2) has a K_{r-1}-free
// neighbourhood holding floor(n^(1/(r-1))) independent vertices by induction;
// otherwise min-degree greedy reaches n/(D+1), which is enough.
fn ramsey(g: &Graph, within: &VertexSet, r: usize) -> VertexSet {
    if r <= 2 || within.is_empty() {
        return within.clone();
    }
    let greedy = min_degree_greedy(g, within);
    let n = within.len() as u128;
    let Some(v) = within.iter().max_by_key(|&v| (g.neighbors(v).intersection_len(within), std::cmp::Reverse(v))) else {
        return greedy;
    };
    let nb = g.neighbors(v).intersection(within);
    let big = match ((nb.len() as u128).checked_pow(r as u32 - 1), n.checked_pow(r as u32 - 2)) {
        (Some(a), Some(b)) => a >= b,
        (None, _) => true,
        (Some(_), None) => false,
    };
    if big {
        let rec = ramsey(g, &nb, r - 1);
        if rec.len() > greedy.len() {
            return rec;
        }
    }
    greedy
}

/// One application of the reduction rule. Vertex ids refer to the input
/// graph of [`kernelize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelRound {
    pub n: usize,
    /// `S_0, …, S_q`; all but `S_0` are kept whole.
    pub layers: Vec<Vec<usize>>,
    /// Last extraction, smaller than k. Part of the residue.
    pub trigger: Vec<usize>,
    pub residue: Vec<usize>,
    pub marked: Vec<usize>,
    pub removed: Vec<usize>,
    /// `k + (k-1)·threshold`, an upper bound on `marked`.
    pub mark_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelTrace {
    pub k: usize,
    pub oracle: String,
    pub threshold: usize,
    pub rounds: Vec<KernelRound>,
    /// Input ids of the output vertices, in output order.
    pub kept: Vec<usize>,
}

/// Shrinks `g` without changing whether every vertex lies in an independent
/// set of size `k`. `g` must belong to the oracle's class.
pub fn kernelize(g: &Graph, k: usize, oracle: &FriendlyOracle) -> Result<(Graph, KernelTrace)> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let threshold = oracle.threshold(k);
    let mut cur = g.vertex_set();
    let mut rounds = Vec::new();
    while cur.len() >= threshold {
        let round = reduce_once(g, &cur, k, oracle, threshold)?;
        let removed = VertexSet::from_iter_in(g.n(), round.removed.iter().copied());
        let done = removed.is_empty();
        cur.difference_with(&removed);
        rounds.push(round);
        if done {
            break;
        }
    }
    let (out, kept) = g.induced_subgraph(&cur)?;
    Ok((out, KernelTrace { k, oracle: oracle.name(), threshold, rounds, kept }))
}

fn reduce_once(g: &Graph, cur: &VertexSet, k: usize, oracle: &FriendlyOracle, threshold: usize) -> Result<KernelRound> {
    let mut layers: Vec<VertexSet> = Vec::new();
    let mut rest = cur.clone();
    let trigger = loop {
        let s = oracle.extract(g, &rest)?;
        if s.len() < k || s.is_empty() {
            break s;
        }
        rest.difference_with(&s);
        layers.push(s);
    };
    let s0 = layers.first().ok_or_else(|| {
        Error::OracleIntegrity(format!(
            "{} found fewer than {k} vertices on {} >= {threshold}",
            oracle.name(),
            cur.len()
        ))
    })?;
    if rest.len() >= threshold {
        return Err(Error::OracleIntegrity(format!(
            "residue of {} vertices is not below the threshold {threshold}",
            rest.len()
        )));
    }
    let mut marked = VertexSet::from_iter_in(g.n(), s0.iter().take(k));
    for x in &rest {
        let free = s0.difference(g.neighbors(x));
        marked.union_with(&VertexSet::from_iter_in(g.n(), free.iter().take(k - 1)));
    }
    let mark_bound = k + (k - 1) * threshold;
    if marked.len() > mark_bound {
        return Err(Error::OracleIntegrity(format!("marked {} > bound {mark_bound}", marked.len())));
    }
    let removed = s0.difference(&marked);
    Ok(KernelRound {
        n: cur.len(),
        layers: layers.iter().map(VertexSet::to_vec).collect(),
        trigger: trigger.to_vec(),
        residue: rest.to_vec(),
        marked: marked.to_vec(),
        removed: removed.to_vec(),
        mark_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn degenerate_bounds() {
        let k4 = Graph::complete(4);
        let o = FriendlyOracle::degenerate(&k4);
        assert_eq!(o, FriendlyOracle::Degenerate { d: 3 });
        assert_eq!(o.extract(&k4, &k4.vertex_set()).unwrap().len(), 1);
        let e6 = Graph::empty(6);
        let o = FriendlyOracle::degenerate(&e6);
        assert_eq!(o.extract(&e6, &e6.vertex_set()).unwrap().len(), 6);
    }

    #[test]
    fn kr_free_bounds() {
        let c5 = Graph::cycle(5);
        let o = FriendlyOracle::kr_free(&c5, 3).unwrap();
        assert_eq!(o.guarantee(5), 2);
        assert_eq!(o.extract(&c5, &c5.vertex_set()).unwrap().len(), 2);
        let e9 = Graph::empty(9);
        assert_eq!(FriendlyOracle::kr_free(&e9, 3).unwrap().extract(&e9, &e9.vertex_set()).unwrap().len(), 9);
        let p = petersen();
        let s = FriendlyOracle::kr_free(&p, 3).unwrap().extract(&p, &p.vertex_set()).unwrap();
        assert!(s.len() >= 3 && p.is_independent(&s));
        match FriendlyOracle::kr_free(&Graph::complete(4), 3) {
            Err(Error::CliqueFound(c)) => assert_eq!(c, vec![0, 1, 2]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn constants() {
        let o = FriendlyOracle::KrFree { r: 4 };
        assert_eq!(
            (o.c(), o.t(), o.threshold(3), o.guarantee(27), o.guarantee(26)),
            (Ratio::new(1, 3), Ratio::from_integer(1), 27, 3, 2)
        );
        let o = FriendlyOracle::Degenerate { d: 2 };
        assert_eq!((o.c(), o.t(), o.threshold(3), o.guarantee(7)), (Ratio::from_integer(1), Ratio::new(1, 3), 9, 3));
    }

    #[test]
    fn small_graph_untouched() {
        let g = Graph::path(5);
        let (out, trace) = kernelize(&g, 3, &FriendlyOracle::degenerate(&g)).unwrap();
        assert_eq!(out, g);
        assert!(trace.rounds.is_empty());
    }

    #[test]
    fn k_one_keeps_one_vertex_per_component_layer() {
        let g = Graph::cycle(8);
        let (out, trace) = kernelize(&g, 1, &FriendlyOracle::degenerate(&g)).unwrap();
        assert!(out.n() >= 1);
        assert!(trace.rounds.iter().all(|r| r.marked.len() <= r.mark_bound));
    }

    #[test]
    fn trace_partitions() {
        let g = Graph::cycle(40);
        let (_, trace) = kernelize(&g, 2, &FriendlyOracle::degenerate(&g)).unwrap();
        for r in &trace.rounds {
            let mut all: Vec<usize> = r.layers.iter().flatten().chain(&r.residue).copied().collect();
            all.sort();
            all.dedup();
            assert_eq!(all.len(), r.n);
            assert!(r.residue.len() < trace.threshold);
            assert!(r.layers[1..].iter().all(|l| l.len() >= 2));
            assert!(r.marked.iter().all(|v| !r.removed.contains(v)));
        }
    }
}
