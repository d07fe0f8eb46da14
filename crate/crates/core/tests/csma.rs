mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use oneext::csma::{parse_rational, starvation_report, theta_sweep, throughput, throughput_limit};
use oneext::mis::independence_polynomial;
use oneext::Graph;
use proptest::prelude::*;

fn q(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

/// `(Z, Z_v per v)` summed over all independent sets.
fn brute_sums(g: &Graph, theta: &BigRational) -> (BigRational, Vec<BigRational>) {
    let mut z = BigRational::zero();
    let mut zv = vec![BigRational::zero(); g.n()];
    for s in common::independent_sets(g) {
        let w = num_traits::pow(theta.clone(), s.count_ones() as usize);
        for (v, acc) in zv.iter_mut().enumerate() {
            if s >> v & 1 == 1 {
                *acc += &w;
            }
        }
        z += w;
    }
    (z, zv)
}

fn arb_theta() -> impl Strategy<Value = BigRational> {
    (1i64..200, 1i64..20).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn throughput_matches_enumeration(g in common::arb_graph(12), theta in arb_theta()) {
        let (z, zv) = brute_sums(&g, &theta);
        prop_assert_eq!(independence_polynomial(&g).unwrap().evaluate(&theta), z.clone());
        let t = throughput(&g, &theta).unwrap();
        for (v, p) in t.p.iter().enumerate() {
            prop_assert_eq!(p, &(&zv[v] / &z));
            prop_assert!(p.is_positive() && *p < BigRational::one());
        }
    }

    #[test]
    fn limits_match_mis_shares(g in common::arb_graph(12)) {
        let sets = common::independent_sets(&g);
        let a = sets.iter().map(|s| s.count_ones()).max().unwrap();
        let max: Vec<u64> = sets.into_iter().filter(|s| s.count_ones() == a).collect();
        let limits = throughput_limit(&g).unwrap().limits;
        let cov = common::covered(&g);
        for v in 0..g.n() {
            let c = max.iter().filter(|s| *s >> v & 1 == 1).count();
            prop_assert_eq!(&limits[v], &BigRational::new(BigInt::from(c), BigInt::from(max.len())));
            prop_assert_eq!(limits[v].is_zero(), !cov[v]);
        }
        let starving = starvation_report(&g).unwrap();
        prop_assert_eq!(starving, (0..g.n()).filter(|&v| !cov[v]).collect::<Vec<_>>());
    }
}

#[test]
fn convergence_is_monotone() {
    let thetas = ["1", "10", "100", "1000"].map(q);
    let suite = [
        Graph::path(4),
        Graph::path(5),
        Graph::path(7),
        Graph::cycle(5),
        Graph::complete(3),
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap(),
    ];
    for g in &suite {
        let limits = throughput_limit(g).unwrap().limits;
        let gaps: Vec<Vec<BigRational>> = thetas
            .iter()
            .map(|t| throughput(g, t).unwrap().p.iter().zip(&limits).map(|(p, l)| (p - l).abs()).collect())
            .collect();
        for w in gaps.windows(2) {
            for (v, (after, before)) in w[1].iter().zip(&w[0]).enumerate() {
                assert!(after < before, "{:?} vertex {v}", g.edges());
            }
        }
    }
}

#[test]
fn path_limits_and_sweeps() {
    let p5 = throughput_limit(&Graph::path(5)).unwrap().limits;
    assert_eq!(p5, ["1", "0", "1", "0", "1"].map(q));
    let p4 = throughput_limit(&Graph::path(4)).unwrap().limits;
    assert_eq!(p4, ["2/3", "1/3", "1/3", "2/3"].map(q));

    let csv = theta_sweep(&Graph::path(5), &[q("100")], 6).unwrap();
    let row: Vec<f64> = csv.lines().nth(1).unwrap().split(',').skip(1).map(|x| x.parse().unwrap()).collect();
    assert!(row[1] < 0.05 && row[3] < 0.05);
    assert!(row[0] > 0.9 && row[2] > 0.9 && row[4] > 0.9);

    let csv = theta_sweep(&Graph::path(4), &[q("20"), q("100")], 6).unwrap();
    assert_eq!(csv.lines().count(), 3);
    for line in csv.lines().skip(1) {
        assert!(line.split(',').skip(1).all(|x| x.parse::<f64>().unwrap() > 0.2), "{line}");
    }
}
