//! The library against independent brute-force references.

mod common;

use std::collections::{BTreeSet, HashSet};

use common::{
    brute_force_params, labelled_oracle_classes, labelled_oracle_classes_with, petersen, Small,
};
use locdom::enumeration::{connected_graphs_up_to, read_graph6, trees, write_graph6};
use locdom::{are_isomorphic, canonical_form, full_report, Graph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

#[test]
fn class_counts_match_labelled_enumeration() {
    let levels = connected_graphs_up_to(6).unwrap();
    for n in 1..=6 {
        let oracle = labelled_oracle_classes(n);
        let ours = &levels[n - 1];
        assert_eq!(ours.len(), oracle.len(), "n={n}");
        let oracle_keys: BTreeSet<u64> = oracle.iter().map(Small::brute_force_key).collect();
        let our_keys: BTreeSet<u64> = ours
            .iter()
            .map(|g| Small::from_graph(g).brute_force_key())
            .collect();
        assert_eq!(our_keys, oracle_keys, "n={n}");
    }
}

#[test]
fn canonical_form_agrees_with_brute_force_isomorphism() {
    let all: Vec<Graph> = connected_graphs_up_to(6)
        .unwrap()
        .into_iter()
        .flatten()
        .collect();
    let keyed: Vec<(usize, u64, _)> = all
        .iter()
        .map(|g| {
            (
                g.order(),
                Small::from_graph(g).brute_force_key(),
                canonical_form(g),
            )
        })
        .collect();
    for (i, a) in keyed.iter().enumerate() {
        for b in &keyed[i + 1..] {
            let iso = a.0 == b.0 && a.1 == b.1;
            assert_eq!(iso, a.2 == b.2);
            assert!(!iso, "enumeration produced an isomorphic pair");
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    for g in &all {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm).unwrap();
        assert!(common::isomorphic(
            &Small::from_graph(g),
            &Small::from_graph(&h)
        ));
        assert_eq!(canonical_form(g), canonical_form(&h));
        assert!(are_isomorphic(g, &h));
    }
}

#[test]
fn isomorphism_on_random_pairs_of_equal_degree_sequence() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut agreements = 0;
    while agreements < 300 {
        let n = rng.gen_range(4..=7);
        let p = rng.gen_range(0.2..0.8);
        let mut mask =
            |_: ()| (0..n * (n - 1) / 2).fold(0u64, |m, i| m | ((rng.gen_bool(p) as u64) << i));
        let a = Small::from_edge_mask(n, mask(()));
        let b = Small::from_edge_mask(n, mask(()));
        let (ga, gb) = (a.to_graph(), b.to_graph());
        if ga.edge_count() != gb.edge_count() {
            continue;
        }
        assert_eq!(are_isomorphic(&ga, &gb), common::isomorphic(&a, &b));
        agreements += 1;
    }
}

#[test]
fn graph6_round_trips_every_small_class() {
    for g in connected_graphs_up_to(6).unwrap().into_iter().flatten() {
        let text = write_graph6(&g).unwrap();
        let back = read_graph6(text.as_bytes()).unwrap();
        assert_eq!(back, g);
        assert!(are_isomorphic(&back, &g));
    }
}

#[test]
fn larger_orders_are_consistent() {
    let levels = connected_graphs_up_to(8).unwrap();
    assert_eq!(
        levels.iter().map(Vec::len).collect::<Vec<_>>(),
        [1, 1, 2, 6, 21, 112, 853, 11117]
    );
    for n in 7..=8 {
        let forms: Vec<_> = levels[n - 1].iter().map(canonical_form).collect();
        let distinct: HashSet<_> = forms.iter().collect();
        assert_eq!(distinct.len(), forms.len(), "duplicate class at n={n}");
        let parents: HashSet<_> = levels[n - 2].iter().map(canonical_form).collect();
        for g in &levels[n - 1] {
            assert!(g.is_connected());
            let has_parent = (0..n).any(|v| {
                let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
                let h = g.induced_subgraph(&keep).unwrap();
                h.is_connected() && parents.contains(&canonical_form(&h))
            });
            assert!(has_parent);
        }
    }
}

#[test]
fn tree_classes() {
    let counts: Vec<usize> = (1..=12).map(|n| trees(n).unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    for n in 1..=7 {
        let ts = trees(n).unwrap();
        let oracle: BTreeSet<u64> =
            labelled_oracle_classes_with(n, |m| m.count_ones() as usize == n - 1)
                .iter()
                .map(Small::brute_force_key)
                .collect();
        let ours: BTreeSet<u64> = ts
            .iter()
            .map(|t| Small::from_graph(t).brute_force_key())
            .collect();
        assert_eq!(ours, oracle, "n={n}");
    }
}

fn random_connected(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.15..0.9);
        let mask = (0..n * (n - 1) / 2).fold(0u64, |m, i| m | ((rng.gen_bool(p) as u64) << i));
        let g = Small::from_edge_mask(n, mask);
        if g.is_connected() {
            return g.to_graph();
        }
    }
}

#[test]
fn solvers_match_brute_force_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..50 {
        let n = rng.gen_range(2..=9);
        let g = random_connected(&mut rng, n);
        let r = full_report(&g).unwrap();
        let o = brute_force_params(&Small::from_graph(&g));
        assert_eq!(
            (r.gamma, r.beta, r.eta, r.lambda),
            (o.gamma, o.beta, o.eta, o.lambda),
            "{g:?}"
        );
    }
}

#[test]
fn petersen_graph() {
    let g = petersen();
    let r = full_report(&g).unwrap();
    // Brute force gives (3, 3, 4, 4); kept literal so that a regression in
    // either implementation shows up here.
    assert_eq!((r.gamma, r.beta, r.eta, r.lambda), (3, 3, 4, 4));
    let o = brute_force_params(&Small::from_graph(&g));
    assert_eq!((o.gamma, o.beta, o.eta, o.lambda), (3, 3, 4, 4));
    assert_eq!(r.diameter, 2);
}
