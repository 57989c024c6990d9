//! Invariants checked on random connected graphs.

use locdom::enumeration::{read_graph6, write_graph6};
use locdom::{canonical_form, full_report, strong_product, CodeChecker, Graph, VertexSet};
use proptest::prelude::*;

/// A connected graph on `2..=max_n` vertices: a random spanning tree plus
/// random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(i, p)| (i + 1, p))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        let bits = proptest::collection::vec(any::<bool>(), n);
        (Just(g), bits.clone(), bits).prop_map(|(g, a, b)| {
            let set = |bits: Vec<bool>| {
                bits.iter()
                    .enumerate()
                    .filter(|(_, &x)| x)
                    .map(|(i, _)| i)
                    .collect()
            };
            (g, set(a), set(b))
        })
    })
}

fn relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let identity: Vec<usize> = (0..g.order()).collect();
        (Just(g), Just(identity).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distances_form_a_metric(g in connected_graph(12)) {
        let n = g.order();
        for u in 0..n {
            for v in 0..n {
                let d = g.distance(u, v).unwrap();
                prop_assert_eq!(d == 0, u == v);
                prop_assert_eq!(d == 1, g.are_adjacent(u, v));
                prop_assert_eq!(d, g.distance(v, u).unwrap());
                for w in 0..n {
                    prop_assert!(d <= g.distance(u, w).unwrap() + g.distance(w, v).unwrap());
                }
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in relabelled(12)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(locdom::are_isomorphic(&canonical_form(&g).to_graph(), &g));
    }

    #[test]
    fn codes_stay_codes_under_supersets((g, s, extra) in graph_and_subset(10)) {
        let c = CodeChecker::new(&g).unwrap();
        let t = s | extra;
        prop_assert!(!c.is_dominating(s) || c.is_dominating(t));
        prop_assert!(!c.is_locating(s) || c.is_locating(t));
        prop_assert!(!c.is_mld(s) || c.is_mld(t));
        prop_assert!(!c.is_ld(s) || c.is_ld(t));
    }

    #[test]
    fn locating_dominating_implies_metric_locating_dominating((g, s, _) in graph_and_subset(10)) {
        let c = CodeChecker::new(&g).unwrap();
        prop_assert_eq!(c.is_mld(s), c.is_dominating(s) && c.is_locating(s));
        if c.is_ld(s) {
            prop_assert!(c.is_mld(s));
        }
    }

    #[test]
    fn union_of_a_dominating_and_a_locating_set((g, a, b) in graph_and_subset(10)) {
        let c = CodeChecker::new(&g).unwrap();
        if c.is_dominating(a) && c.is_locating(b) {
            prop_assert!(c.is_mld(a | b));
        }
    }

    #[test]
    fn optimal_codes_and_the_chain(g in connected_graph(8)) {
        let r = full_report(&g).unwrap();
        let c = CodeChecker::new(&g).unwrap();
        let union = r.witness_gamma.to_set() | r.witness_beta.to_set();
        prop_assert!(c.is_mld(union));
        prop_assert!(r.gamma.max(r.beta) <= r.eta);
        prop_assert!(r.eta <= (r.gamma + r.beta).min(r.lambda));
    }

    #[test]
    fn graph6_round_trip(g in connected_graph(30)) {
        let text = write_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(read_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn strong_product_distance_is_the_maximum(g in connected_graph(5), h in connected_graph(5)) {
        let p = strong_product(&g, &h).unwrap();
        let m = h.order();
        for (a, b) in [(0, 0), (g.order() - 1, m - 1)] {
            for x in 0..g.order() {
                for y in 0..m {
                    let expected = g.distance(a, x).unwrap().max(h.distance(b, y).unwrap());
                    prop_assert_eq!(p.distance(a * m + b, x * m + y).unwrap(), expected);
                }
            }
        }
    }
}
