mod common;

use common::{arb_dense_graph, arb_graph, graphs_upto8, has_cycle};
use pancyclic::cycle::validate_cycle;
use pancyclic::finders::odd_anchor::{odd_anchor_subgraph_with, tuple_family, DEFAULT_RETRY_BUDGET};
use pancyclic::finders::{
    find_cycle_or_independent_set, find_short_cycle, ramsey_bound_erdos, ramsey_bound_keevash, CycleOrIndependent,
};
use pancyclic::independence::independence_number;
use pancyclic::search::DEFAULT_SEARCH_BUDGET;
use pancyclic::Graph;
use proptest::prelude::*;

#[test]
fn short_cycles_agree_with_brute_force_up_to_8() {
    let mut checked = 0;
    for g in graphs_upto8() {
        let alpha = independence_number(&g).unwrap();
        if g.min_degree() <= alpha {
            continue;
        }
        for ell in 3..=7.min(g.n()) {
            let exists = has_cycle(&g, ell);
            match find_short_cycle(&g, ell) {
                Ok(sc) => {
                    assert!(exists);
                    assert_eq!(sc.cycle.len(), ell);
                    validate_cycle(&g, &sc.cycle).unwrap();
                }
                Err(e) => assert!(!exists, "{g:?} ell={ell}: {e}"),
            }
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn refined_ramsey_bound_below_classical_in_regime() {
    for ell in 3..=50 {
        for s in 3..=50 {
            let k = ramsey_bound_keevash(ell, s);
            if k.in_regime {
                assert!(k.value <= ramsey_bound_erdos(ell, s).unwrap(), "ell={ell} s={s}");
            }
        }
    }
}

/// `m` cliques of order `m + 2` plus random edges, so `δ > α`.
fn arb_min_degree_graph() -> impl Strategy<Value = Graph> {
    (
        2usize..6,
        proptest::collection::vec((0usize..64, 0usize..64), 0..20),
        any::<u64>(),
    )
        .prop_map(|(m, extra, seed)| {
            let s = m + 2;
            let n = m * s;
            let mut edges = Vec::new();
            let shift = (seed % n as u64) as usize;
            let lab = |v: usize| (v + shift) % n;
            for c in 0..m {
                for i in 0..s {
                    for j in i + 1..s {
                        edges.push((lab(c * s + i), lab(c * s + j)));
                    }
                }
            }
            edges.extend(extra.into_iter().map(|(x, y)| (x % n, y % n)).filter(|(x, y)| x != y));
            Graph::from_edges(n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn anchors_are_literal(g in prop_oneof![arb_min_degree_graph(), arb_dense_graph(6, 16, 70)], seed in any::<u64>()) {
        let alpha = independence_number(&g).unwrap();
        prop_assume!(g.min_degree() > alpha);
        let family = tuple_family(&g, alpha);
        match odd_anchor_subgraph_with(&g, alpha, seed, DEFAULT_RETRY_BUDGET) {
            Ok(h) => {
                prop_assert!(!h.host_edges.is_empty());
                let x: Vec<usize> = h.vertices.clone();
                for &(a, b) in &h.host_edges {
                    let c = &h.anchors[&(a, b)];
                    prop_assert!(validate_cycle(&g, c).is_ok());
                    prop_assert!(c.len() == 3 || c.len() == 5);
                    prop_assert!(c.has_cycle_edge(a, b));
                    let mut meet: Vec<usize> = c.vertices().iter().copied().filter(|v| x.contains(v)).collect();
                    meet.sort_unstable();
                    prop_assert_eq!(meet, vec![a, b]);
                }
            }
            Err(_) => {}
        }
        if !family.is_empty() {
            prop_assert!(odd_anchor_subgraph_with(&g, alpha, seed, 4 * DEFAULT_RETRY_BUDGET).is_ok());
        }
    }

    #[test]
    fn ramsey_band_never_neither(ell in 5usize..=8, s in 2usize..=4, g in arb_graph(8, 14)) {
        let bound = ramsey_bound_keevash(ell, s).value;
        prop_assume!(g.n() >= bound && g.n() <= 14);
        let out = find_cycle_or_independent_set(&g, ell, s, DEFAULT_SEARCH_BUDGET).unwrap();
        match out {
            CycleOrIndependent::Cycle(c) => {
                prop_assert_eq!(c.len(), ell);
                prop_assert!(validate_cycle(&g, &c).is_ok());
            }
            CycleOrIndependent::IndependentSet(set) => {
                prop_assert_eq!(set.len(), s);
                for (i, &a) in set.iter().enumerate() {
                    for &b in &set[i + 1..] {
                        prop_assert!(!g.has_edge(a, b));
                    }
                }
            }
            CycleOrIndependent::Neither => prop_assert!(false, "neither at n={}", g.n()),
        }
    }
}
