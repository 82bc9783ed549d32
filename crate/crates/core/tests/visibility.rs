mod common;

use common::{floyd, naive_classify, random_connected, random_subset};
use mvis::{cartesian_product, classify_set, satisfies, FamilySpec, Graph, Variant, VertexSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0.0..0.6f64, any::<u64>()).prop_map(|(n, p, seed)| random_connected(n, p, seed))
}

fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    (arb_graph(max_n), any::<u64>()).prop_map(|(g, seed)| {
        let s = VertexSet::from_vertices(g.n(), random_subset(g.n(), seed)).unwrap();
        (g, s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn classifier_matches_geodesic_enumeration((g, x) in arb_graph_and_set(7)) {
        let d = floyd(&g);
        let naive = naive_classify(&g, &d, &x.to_vec());
        let r = classify_set(&g, &x);
        for (k, v) in Variant::ALL.into_iter().enumerate() {
            prop_assert_eq!(r.holds(v), naive[k], "{} on {:?}", v, x);
            prop_assert_eq!(r.violation(v).is_none(), naive[k]);
        }
    }

    #[test]
    fn hereditary_variants_survive_deletion((g, x) in arb_graph_and_set(10), pick in any::<usize>()) {
        prop_assume!(!x.is_empty());
        let victim = x.to_vec()[pick % x.len()];
        let mut y = x.clone();
        y.remove(victim);
        for v in Variant::ALL.into_iter().filter(|v| v.is_hereditary()) {
            if satisfies(&g, &x, v) {
                prop_assert!(satisfies(&g, &y, v), "{} lost after removing {}", v, victim);
            }
        }
    }

    #[test]
    fn intervals_are_symmetric_and_contain_ends(g in arb_graph(12), a in any::<usize>(), b in any::<usize>()) {
        let (u, v) = (a % g.n(), b % g.n());
        let i = g.interval(u, v);
        prop_assert!(i.contains(u) && i.contains(v));
        prop_assert_eq!(i, g.interval(v, u));
    }

    #[test]
    fn distances_match_floyd(g in arb_graph(12)) {
        let d = floyd(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                prop_assert_eq!(g.distance(u, v), d[u][v]);
            }
        }
    }
}

#[test]
fn dual_is_not_hereditary_on_c6() {
    let c6: Graph = "cycle:6".parse::<FamilySpec>().unwrap().generate().unwrap();
    let pair = c6.vertex_set([0, 1]).unwrap();
    assert!(classify_set(&c6, &pair).is_dual);
    let single = c6.vertex_set([0]).unwrap();
    assert!(!classify_set(&c6, &single).is_dual);
}

#[test]
fn product_distances_are_manhattan() {
    for n in 2..=8 {
        for m in 2..=8 {
            let g = FamilySpec::Grid { n, m }.generate().unwrap();
            for u in 0..n * m {
                for v in 0..n * m {
                    let (a, b, c, d) = (u / m, u % m, v / m, v % m);
                    assert_eq!(g.distance(u, v) as usize, a.abs_diff(c) + b.abs_diff(d));
                }
            }
            if n >= 3 && m >= 3 {
                let t = FamilySpec::Torus { n, m }.generate().unwrap();
                let wrap = |x: usize, y: usize, k: usize| x.abs_diff(y).min(k - x.abs_diff(y));
                for u in 0..n * m {
                    for v in 0..n * m {
                        let (a, b, c, d) = (u / m, u % m, v / m, v % m);
                        assert_eq!(t.distance(u, v) as usize, wrap(a, c, n) + wrap(b, d, m));
                    }
                }
            }
        }
    }
}

#[test]
fn layers_are_convex() {
    for (n, m) in [(5, 4), (6, 6), (7, 3)] {
        for g in [
            FamilySpec::Grid { n, m }.generate().unwrap(),
            FamilySpec::Torus { n, m }.generate().unwrap(),
        ] {
            for i in 0..n {
                let row = g.vertex_set((0..m).map(|j| i * m + j)).unwrap();
                assert!(g.is_convex(&row).unwrap());
            }
            for j in 0..m {
                let col = g.vertex_set((0..n).map(|i| i * m + j)).unwrap();
                assert!(g.is_convex(&col).unwrap());
            }
        }
    }
}

#[test]
fn products_commute_up_to_isomorphism() {
    let specs = ["path:4", "cycle:5", "star:3", "gn:2"];
    for a in specs {
        for b in specs {
            let g: Graph = a.parse::<FamilySpec>().unwrap().generate().unwrap();
            let h: Graph = b.parse::<FamilySpec>().unwrap().generate().unwrap();
            let (gh, hg) = (cartesian_product(&g, &h), cartesian_product(&h, &g));
            assert_eq!((gh.n(), gh.m()), (hg.n(), hg.m()));
            let degs = |x: &Graph| {
                let mut d: Vec<_> = (0..x.n()).map(|v| x.degree(v)).collect();
                d.sort();
                d
            };
            assert_eq!(degs(&gh), degs(&hg));
        }
    }
}
