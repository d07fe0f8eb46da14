//! Brute-force oracles and random instance generators shared by the
//! integration tests. Everything here enumerates subsets directly, so it
//! is only meant for small graphs.
#![allow(dead_code)]

use oneext::{Graph, GraphBuilder};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn masks(g: &Graph) -> Vec<u64> {
    assert!(g.n() <= 64);
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w)).collect()
}

/// Every independent set as a bitmask, the empty set included.
pub fn independent_sets(g: &Graph) -> Vec<u64> {
    fn go(adj: &[u64], v: usize, cur: u64, out: &mut Vec<u64>) {
        if v == adj.len() {
            out.push(cur);
            return;
        }
        go(adj, v + 1, cur, out);
        if adj[v] & cur == 0 {
            go(adj, v + 1, cur | 1 << v, out);
        }
    }
    let mut out = Vec::new();
    go(&masks(g), 0, 0, &mut out);
    out
}

pub fn alpha(g: &Graph) -> usize {
    independent_sets(g).iter().map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

/// Per vertex: is it in some maximum independent set?
pub fn covered(g: &Graph) -> Vec<bool> {
    let sets = independent_sets(g);
    let a = sets.iter().map(|s| s.count_ones()).max().unwrap_or(0);
    let union = sets.iter().filter(|s| s.count_ones() == a).fold(0u64, |m, s| m | s);
    (0..g.n()).map(|v| union >> v & 1 == 1).collect()
}

pub fn one_extendable(g: &Graph) -> bool {
    covered(g).into_iter().all(|c| c)
}

/// Does every vertex lie in an independent set of size at least `k`?
pub fn param(g: &Graph, k: usize) -> bool {
    let sets = independent_sets(g);
    (0..g.n()).all(|v| sets.iter().any(|s| s >> v & 1 == 1 && s.count_ones() as usize >= k))
}

/// `N_s`, the number of independent sets of each size.
pub fn poly(g: &Graph) -> Vec<u64> {
    let mut c = vec![0u64; g.n() + 1];
    for s in independent_sets(g) {
        c[s.count_ones() as usize] += 1;
    }
    while c.len() > 1 && *c.last().unwrap() == 0 {
        c.pop();
    }
    c
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build().unwrap()
}

/// Every vertex has at most `d` neighbours among earlier vertices, so the
/// degeneracy is at most `d`.
pub fn random_degenerate(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        let picks = rng.gen_range(0..=d.min(v));
        for _ in 0..picks {
            let u = rng.gen_range(0..v);
            b.add_edge(u, v).unwrap();
        }
    }
    b.build().unwrap()
}

/// A random graph whose vertices are split into `k` cliques, listed in id
/// order.
pub fn random_clique_partitioned(rng: &mut ChaCha8Rng, k: usize, max_size: usize, p: f64) -> (Graph, Vec<Vec<usize>>) {
    let mut parts = Vec::new();
    let mut n = 0;
    for _ in 0..k {
        let s = rng.gen_range(1..=max_size);
        parts.push((n..n + s).collect::<Vec<_>>());
        n += s;
    }
    let mut b = GraphBuilder::new(n);
    let mut part_of = vec![0; n];
    for (i, c) in parts.iter().enumerate() {
        for &v in c {
            part_of[v] = i;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] == part_of[v] || rng.gen_bool(p) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    (b.build().unwrap(), parts)
}

/// Is there an independent set with one vertex from each part?
pub fn multicolored(g: &Graph, parts: &[Vec<usize>]) -> bool {
    let adj = masks(g);
    fn go(adj: &[u64], parts: &[Vec<usize>], i: usize, cur: u64) -> bool {
        i == parts.len() || parts[i].iter().any(|&v| adj[v] & cur == 0 && go(adj, parts, i + 1, cur | 1 << v))
    }
    go(&adj, parts, 0, 0)
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut b = GraphBuilder::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        b.add_edge(u, v).unwrap();
                    }
                }
            }
            b.build().unwrap()
        })
    })
}
