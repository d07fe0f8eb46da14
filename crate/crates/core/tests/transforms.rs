mod common;

use oneext::extend::{is_one_extendable, param_one_extendability};
use oneext::mis::alpha;
use oneext::transforms::*;
use oneext::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn t1_always_one_extendable() {
    let mut r = rng(1);
    for _ in 0..100 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.1..0.9);
        let g = common::random_graph(&mut r, n, p);
        let (h, cert) = t1_pendant(&g).unwrap();
        assert_eq!((h.n(), h.m()), (2 * n, g.m() + n));
        assert_eq!(common::alpha(&h), n);
        assert!(common::one_extendable(&h));
        assert!(cert.vertex_map.iter().all(|m| m.len() == 2 && h.degree(m[1]) == 1));
    }
}

#[test]
fn t2_preserves_one_extendability() {
    let mut r = rng(2);
    for _ in 0..150 {
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.1..0.8);
        let g = common::random_graph(&mut r, n, p);
        let s = if g.m() <= 6 { r.gen_range(1..=2) } else { 1 };
        let (h, _) = t2_subdivide(&g, s).unwrap();
        assert_eq!(h.n(), n + 2 * s * g.m());
        assert_eq!(common::alpha(&h), common::alpha(&g) + s * g.m());
        assert_eq!(common::one_extendable(&h), common::one_extendable(&g), "{g:?} s={s}");
    }
}

#[test]
fn t3_small_cases_by_brute_force() {
    let (h, _) = t3_degree_reduce(&Graph::complete(3), None).unwrap();
    assert_eq!((h.n(), common::alpha(&h)), (9, 4));
    let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    let (h, _) = t3_degree_reduce(&star, None).unwrap();
    assert_eq!((h.n(), common::alpha(&h)), (20, 11));
    assert!(h.max_degree() <= 3);
}

#[test]
fn t3_alpha_and_forward_preservation() {
    let mut r = rng(3);
    let mut extendable_seen = 0;
    for i in 0..50 {
        let n = r.gen_range(1..=7);
        let p = r.gen_range(0.2..0.8);
        let g = common::random_graph(&mut r, n, p);
        let delta = g.max_degree();
        // every other case uses a shuffled neighbour order
        let rotation: Option<Vec<Vec<usize>>> = (i % 2 == 1).then(|| {
            (0..n)
                .map(|u| {
                    let mut nb = g.neighbors(u).to_vec();
                    for j in (1..nb.len()).rev() {
                        nb.swap(j, r.gen_range(0..=j));
                    }
                    nb
                })
                .collect()
        });
        let (h, cert) = t3_degree_reduce(&g, rotation.as_deref()).unwrap();
        assert!(h.max_degree() <= 3);
        let a = common::alpha(&g);
        assert_eq!(alpha(&h).unwrap(), n * delta.saturating_sub(1) + a);
        assert!(cert.vertex_map.iter().all(|p| p.len() == (2 * delta).saturating_sub(1).max(1)));
        if common::one_extendable(&g) {
            extendable_seen += 1;
            // the middle vertices of an isolated vertex's path lie in no MIS
            let isolated = (0..n).any(|u| g.degree(u) == 0);
            let expect = delta <= 1 || !isolated;
            assert_eq!(is_one_extendable(&h).unwrap().one_extendable, expect, "{g:?}");
        }
    }
    assert!(extendable_seen >= 5);
}

#[test]
fn t3_isolated_vertex_breaks_forward_direction() {
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    assert!(common::one_extendable(&g));
    let (h, cert) = t3_degree_reduce(&g, None).unwrap();
    let r = is_one_extendable(&h).unwrap();
    assert_eq!(r.uncovered(), vec![cert.vertex_map[3][1]]);
}

#[test]
fn t3_rejects_bad_rotation() {
    let g = Graph::path(3);
    assert!(t3_degree_reduce(&g, Some(&[vec![1], vec![0], vec![1]])).is_err());
    assert!(t3_degree_reduce(&g, Some(&[vec![1], vec![0, 2]])).is_err());
}

#[test]
fn g_plus_below_n_detects_alpha() {
    let mut r = rng(4);
    for _ in 0..30 {
        let n = r.gen_range(1..=8);
        let p = r.gen_range(0.1..0.8);
        let g = common::random_graph(&mut r, n, p);
        let a = common::alpha(&g);
        for k in 0..n {
            let (h, _) = g_plus(&g, k).unwrap();
            assert_eq!(h.n(), 3 * n - k);
            assert_eq!(common::one_extendable(&h), a == k, "{g:?} r={k}");
        }
        // S is empty at r = n, leaving only the pendants
        let (h, _) = g_plus(&g, n).unwrap();
        assert_eq!(h, t1_pendant(&g).unwrap().0);
        assert!(common::one_extendable(&h));
    }
    assert!(g_plus(&Graph::path(2), 3).is_err());
}

#[test]
fn gap_construction_properties() {
    let mut r = rng(5);
    for _ in 0..20 {
        let k = r.gen_range(1..=4);
        let (g, parts) = common::random_clique_partitioned(&mut r, k, 2, 0.35);
        let (h, cert) = gap_construction(&g, &parts).unwrap();
        assert_eq!(h.n(), 2 * g.n() + 2 * k);
        assert_eq!(common::alpha(&h), k + common::alpha(&g));
        assert!(common::one_extendable(&h));
        let big = common::independent_sets(&h).iter().any(|s| s.count_ones() as usize >= 2 * k);
        assert_eq!(big, common::multicolored(&g, &parts));
        assert_eq!(cert.groups["P1"].len(), k);
    }
}

#[test]
fn w1_construction_properties() {
    let mut r = rng(6);
    for _ in 0..25 {
        let k = r.gen_range(1..=4);
        let (g, parts) = common::random_clique_partitioned(&mut r, k, 3, 0.4);
        let (h, _) = w1_construction(&g, &parts).unwrap();
        assert_eq!(h.n(), g.n() + k + 2);
        let want = common::multicolored(&g, &parts);
        assert_eq!(common::param(&h, k + 1), want);
        assert_eq!(param_one_extendability(&h, k + 1).unwrap().holds, want);
    }
}

#[test]
fn clique_partition_errors() {
    let p3 = Graph::path(3);
    assert!(gap_construction(&p3, &[vec![0, 1, 2]]).is_err());
    assert!(w1_construction(&p3, &[vec![0, 1]]).is_err());
}

#[test]
fn gadget_table_by_brute_force() {
    let h = gjs_gadget();
    let g = &h.graph;
    assert_eq!(g.n(), GADGET_SIZE);
    let bit = |v: usize| 1u64 << v;
    let xs = bit(h.x) | bit(h.x_prime);
    let ys = bit(h.y) | bit(h.y_prime);
    let mut table = [[0usize; 3]; 3];
    for s in common::independent_sets(g) {
        let (i, j) = ((s & ys).count_ones() as usize, (s & xs).count_ones() as usize);
        table[i][j] = table[i][j].max(s.count_ones() as usize);
    }
    assert_eq!(table, GADGET_TABLE);
    assert_eq!(common::alpha(g), GADGET_ALPHA);
}

/// Every MIS of `gp` (by enumeration) restricted to `V(G)` becomes an MIS
/// of `G` after dropping one endpoint of each edge of `G` it contains.
/// Returns how many MISs needed such a repair.
fn pull_back_by_enumeration(g: &Graph, gp: &Graph) -> usize {
    let sets = common::independent_sets(gp);
    let a = sets.iter().map(|s| s.count_ones()).max().unwrap();
    let g_alpha = common::alpha(g);
    let mut repaired = 0;
    for s in sets.iter().filter(|s| s.count_ones() == a) {
        let mut kept = VertexSet::from_iter_in(g.n(), (0..g.n()).filter(|&v| s >> v & 1 == 1));
        let before = kept.len();
        for (u, v) in g.edges() {
            if kept.contains(u) && kept.contains(v) {
                kept.remove(v);
            }
        }
        repaired += (kept.len() < before) as usize;
        assert!(g.is_independent(&kept));
        assert_eq!(kept.len(), g_alpha);
    }
    repaired
}

#[test]
fn crossing_pull_back_by_enumeration() {
    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let (gp, _) = replace_crossings(&two_k2, &[CrossingSpec { through: (0, 1), crossed: vec![(2, 3)] }]).unwrap();
    assert_eq!(common::alpha(&gp), 11);
    // Taking both ends of a cut edge costs its gadget one vertex (table
    // cell 8 instead of 9), which the extra original vertex pays back, so
    // some MISs restrict to a non-independent set.
    assert!(pull_back_by_enumeration(&two_k2, &gp) > 0);
    let k4 = Graph::complete(4);
    let (gp, _) = replace_crossings(&k4, &[CrossingSpec { through: (0, 2), crossed: vec![(1, 3)] }]).unwrap();
    pull_back_by_enumeration(&k4, &gp);
}

#[test]
fn crossing_alpha_shift_and_lift() {
    let k4 = Graph::complete(4);
    let three_k2 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
    let c6 = Graph::cycle(6);
    let cases: Vec<(Graph, Vec<CrossingSpec>)> = vec![
        (k4, vec![CrossingSpec { through: (0, 2), crossed: vec![(1, 3)] }]),
        (three_k2.clone(), vec![CrossingSpec { through: (0, 1), crossed: vec![(2, 3), (4, 5)] }]),
        (
            three_k2,
            vec![
                CrossingSpec { through: (0, 1), crossed: vec![(2, 3)] },
                CrossingSpec { through: (4, 5), crossed: vec![(3, 2)] },
            ],
        ),
        (
            c6,
            vec![
                CrossingSpec { through: (0, 1), crossed: vec![(3, 4)] },
                CrossingSpec { through: (1, 2), crossed: vec![(4, 5)] },
            ],
        ),
    ];
    for (g, specs) in cases {
        let lambda: usize = specs.iter().map(|s| s.crossed.len()).sum();
        let (gp, _) = replace_crossings(&g, &specs).unwrap();
        assert_eq!(gp.n(), g.n() + 22 * lambda);
        let a = alpha(&gp).unwrap();
        assert_eq!(a, common::alpha(&g) + 9 * lambda, "{specs:?}");
        // an MIS of G lifts to one of G_+
        let lifted = gp.vertex_set().difference(&VertexSet::from_iter_in(gp.n(), 0..g.n()));
        let base = oneext::mis::max_independent_set(&g).unwrap().witness;
        let mut rest = lifted.clone();
        for v in &base {
            rest.difference_with(gp.neighbors(v));
        }
        let (sub, _) = gp.induced_subgraph(&rest).unwrap();
        assert_eq!(base.len() + alpha(&sub).unwrap(), a);
    }
}

/// MISs meeting `{u, u', v, v'}` in exactly `{u}` and exactly `{u'}`.
fn hypotheses_hold(g: &Graph, (u, u2): (usize, usize), crossed: &[(usize, usize)]) -> bool {
    let sets = common::independent_sets(g);
    let a = sets.iter().map(|s| s.count_ones()).max().unwrap();
    let maxi: Vec<u64> = sets.into_iter().filter(|s| s.count_ones() == a).collect();
    crossed.iter().all(|&(v, v2)| {
        let four = 1u64 << u | 1 << u2 | 1 << v | 1 << v2;
        [u, u2].iter().all(|&w| maxi.iter().any(|s| s & four == 1 << w))
    })
}

#[test]
fn crossing_preserves_one_extendability_under_hypotheses() {
    let mut r = rng(8);
    let mut checked = 0;
    for _ in 0..600 {
        let n = r.gen_range(4..=7);
        let p = r.gen_range(0.2..0.6);
        let g = common::random_graph(&mut r, n, p);
        let edges = g.edges();
        if edges.len() < 2 {
            continue;
        }
        let through = edges[r.gen_range(0..edges.len())];
        let mut crossed: Vec<(usize, usize)> =
            edges.iter().copied().filter(|&(a, b)| [a, b].iter().all(|w| *w != through.0 && *w != through.1)).collect();
        crossed.truncate(r.gen_range(1..=2));
        if crossed.is_empty() {
            continue;
        }
        let (gp, _) = replace_crossings(&g, &[CrossingSpec { through, crossed: crossed.clone() }]).unwrap();
        let ext = is_one_extendable(&gp).unwrap();
        assert_eq!(ext.alpha, common::alpha(&g) + 9 * crossed.len());
        if hypotheses_hold(&g, through, &crossed) {
            checked += 1;
            assert_eq!(ext.one_extendable, common::one_extendable(&g), "{g:?} {through:?} {crossed:?}");
        }
    }
    assert!(checked >= 10, "only {checked} instances met the hypotheses");
}
