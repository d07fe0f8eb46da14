mod common;

use num_bigint::BigUint;
use oneext::mis::{self, Budget, Solver, Strategy};
use oneext::{Error, Graph, VertexSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn solve(g: &Graph, strategy: Strategy) -> VertexSet {
    let b = Budget::unlimited();
    Solver::new(g, &b).with_strategy(strategy).max_independent_set().unwrap().witness
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alpha_matches_brute_force(g in common::arb_graph(12)) {
        let want = common::alpha(&g);
        for s in [Strategy::Auto, Strategy::BranchAndBound, Strategy::TreeDp] {
            let w = solve(&g, s);
            prop_assert!(g.is_independent(&w));
            prop_assert_eq!(w.len(), want, "{:?}", s);
        }
    }

    #[test]
    fn polynomial_matches_brute_force(g in common::arb_graph(12)) {
        let p = mis::independence_polynomial(&g).unwrap();
        let want: Vec<BigUint> = common::poly(&g).into_iter().map(BigUint::from).collect();
        prop_assert_eq!(p.coefficients(), &want[..]);
        prop_assert_eq!(p.degree(), common::alpha(&g));
    }

    #[test]
    fn mis_counts_match_brute_force(g in common::arb_graph(10)) {
        let sets = common::independent_sets(&g);
        let a = common::alpha(&g) as u32;
        let maxi: Vec<u64> = sets.into_iter().filter(|s| s.count_ones() == a).collect();
        for v in 0..g.n() {
            let c = mis::mis_counts(&g, Some(v)).unwrap();
            prop_assert_eq!(c.total, BigUint::from(maxi.len()));
            let with_v = maxi.iter().filter(|s| *s >> v & 1 == 1).count();
            prop_assert_eq!(c.containing, Some(BigUint::from(with_v)));
        }
    }

    #[test]
    fn k_containing_matches_brute_force(g in common::arb_graph(10), k in 0usize..6) {
        let sets = common::independent_sets(&g);
        for v in 0..g.n() {
            let got = mis::has_k_is_containing(&g, v, k).unwrap();
            let want = k == 0 || sets.iter().any(|s| s >> v & 1 == 1 && s.count_ones() as usize == k);
            prop_assert_eq!(got.is_some(), want);
            if let Some(w) = got {
                prop_assert!(w.contains(v) && g.is_independent(&w));
                prop_assert_eq!(w.len(), k.max(1));
            }
        }
    }

    // v lies in a size-k independent set iff G - N[v] has one of size k - 1
    #[test]
    fn closed_neighbourhood_reduction(g in common::arb_graph(10), k in 1usize..5) {
        for v in 0..g.n() {
            let (h, _) = g.remove_closed_neighborhood(v).unwrap();
            let direct = mis::has_k_is_containing(&g, v, k).unwrap().is_some();
            prop_assert_eq!(direct, mis::alpha(&h).unwrap() + 1 >= k);
        }
    }

    #[test]
    fn edge_list_round_trip(g in common::arb_graph(12)) {
        let text = g.to_edge_list();
        prop_assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }
}

#[test]
fn witnesses_are_deterministic() {
    let g = Graph::cycle(11);
    let a = solve(&g, Strategy::Auto);
    for _ in 0..3 {
        assert_eq!(solve(&g, Strategy::Auto), a);
    }
}

#[test]
fn budget_exhaustion_is_reported() {
    let g = common::random_graph(&mut ChaCha8Rng::seed_from_u64(7), 40, 0.3);
    for s in [Strategy::BranchAndBound, Strategy::TreeDp] {
        let b = Budget::nodes(5);
        let r = Solver::new(&g, &b).with_strategy(s).max_independent_set();
        assert!(matches!(r, Err(Error::BudgetExceeded(5))), "{s:?}");
    }
}

#[test]
fn large_sparse_graphs_use_dynamic_programming() {
    // a 40x3 grid has small width but no simplicial shortcut at every step
    let (w, h) = (40, 3);
    let mut e = Vec::new();
    for x in 0..w {
        for y in 0..h {
            let v = x * h + y;
            if x + 1 < w {
                e.push((v, v + h));
            }
            if y + 1 < h {
                e.push((v, v + 1));
            }
        }
    }
    let g = Graph::from_edges(w * h, &e).unwrap();
    assert_eq!(mis::alpha(&g).unwrap(), 60);
}
