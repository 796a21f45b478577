mod common;

use common::{arb_dense_graph, arb_graph, brute_alpha, brute_kappa, floyd, graphs8};
use pancyclic::connectivity::{bfs_layers, disjoint_paths, vertex_connectivity};
use pancyclic::independence::independence_number;
use pancyclic::{Graph, VertexSet};
use proptest::prelude::*;

#[test]
fn invariants_match_brute_force_on_all_8_vertex_graphs() {
    for g in graphs8() {
        assert_eq!(independence_number(&g).unwrap(), brute_alpha(&g));
        let kappa = vertex_connectivity(&g).unwrap();
        assert_eq!(kappa, brute_kappa(&g));
        assert!(kappa <= g.min_degree());
    }
}

/// Whether an admissible `a`-`b` route survives deleting the cut.
fn route_survives(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    forbidden: &VertexSet,
    cut_v: &[usize],
    cut_e: &[(usize, usize)],
) -> bool {
    let dead = |v: usize| cut_v.contains(&v);
    let interior = |v: usize| !a.contains(v) && !b.contains(v) && !forbidden.contains(v) && !dead(v);
    let mut seen = vec![false; g.n()];
    let mut stack: Vec<usize> = a.iter().filter(|&x| !dead(x)).collect();
    for &x in &stack {
        seen[x] = true;
    }
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v).iter() {
            if b.contains(w) && !dead(w) {
                let direct = a.contains(v);
                if !(direct && cut_e.contains(&(v, w))) {
                    return true;
                }
            } else if interior(w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn alpha_and_kappa_match_brute_force(g in arb_graph(1, 8)) {
        prop_assert_eq!(independence_number(&g).unwrap(), brute_alpha(&g));
        if g.n() >= 2 {
            let kappa = vertex_connectivity(&g).unwrap();
            prop_assert_eq!(kappa, brute_kappa(&g));
            prop_assert!(kappa <= g.min_degree());
        }
    }

    #[test]
    fn kappa_at_most_min_degree(g in arb_dense_graph(2, 24, 60)) {
        prop_assert!(vertex_connectivity(&g).unwrap() <= g.min_degree());
    }

    #[test]
    fn disjoint_paths_are_disjoint_or_cut(
        g in arb_dense_graph(4, 14, 35),
        roles in proptest::collection::vec(0u8..6, 14),
        k in 1usize..5,
    ) {
        let n = g.n();
        let a = VertexSet::from_iter(n, (0..n).filter(|&v| roles[v] == 0));
        let b = VertexSet::from_iter(n, (0..n).filter(|&v| roles[v] == 1));
        let forbidden = VertexSet::from_iter(n, (0..n).filter(|&v| roles[v] == 2));
        prop_assume!(!a.is_empty() && !b.is_empty());
        let sys = disjoint_paths(&g, &a, &b, k, &forbidden).unwrap();
        prop_assert!(sys.paths.len() <= k);
        let mut used = VertexSet::new(n);
        for p in &sys.paths {
            prop_assert!(p.validate(&g).is_ok());
            prop_assert!(a.contains(p.first()) && b.contains(p.last()));
            for &v in p.interior() {
                prop_assert!(!a.contains(v) && !b.contains(v) && !forbidden.contains(v));
                prop_assert!(!used.contains(v), "interiors meet at {}", v);
                used.insert(v);
            }
        }
        for (side, pick) in [(&a, 0usize), (&b, 1)] {
            if side.len() > 1 {
                let mut ends: Vec<usize> = sys.paths.iter().map(|p| if pick == 0 { p.first() } else { p.last() }).collect();
                let len = ends.len();
                ends.sort_unstable();
                ends.dedup();
                prop_assert_eq!(ends.len(), len);
            }
        }
        match &sys.cut {
            None => prop_assert_eq!(sys.paths.len(), k),
            Some(cut) => {
                prop_assert!(sys.paths.len() < k);
                prop_assert_eq!(cut.vertices.len() + cut.edges.len(), sys.paths.len());
                prop_assert!(!route_survives(&g, &a, &b, &forbidden, &cut.vertices, &cut.edges));
            }
        }
    }

    #[test]
    fn bfs_layers_are_distances(
        g in arb_dense_graph(1, 64, 8),
        forb in proptest::collection::vec(0u8..8, 64),
        src in 0usize..64,
    ) {
        let n = g.n();
        let s = src % n;
        let forbidden: Vec<bool> = (0..n).map(|v| v != s && forb[v] == 0).collect();
        let fset = VertexSet::from_iter(n, (0..n).filter(|&v| forbidden[v]));
        let layers = bfs_layers(&g, s, &fset).unwrap();
        let d = floyd(&g, &forbidden);
        for v in 0..n {
            let hits = layers.layers.iter().filter(|l| l.contains(v)).count();
            if d[s][v] == usize::MAX {
                prop_assert_eq!(hits, 0);
            } else {
                prop_assert_eq!(hits, 1);
                prop_assert_eq!(layers.layer_of(v), Some(d[s][v]));
            }
        }
    }
}
