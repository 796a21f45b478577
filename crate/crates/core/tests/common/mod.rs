#![allow(dead_code)]

use pancyclic::io::from_graph6;
use pancyclic::Graph;
use proptest::prelude::*;

/// Graphs on `lo..=hi` vertices with independent edge bits.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Graphs on `lo..=hi` vertices with edge probability `p` in percent.
pub fn arb_dense_graph(lo: usize, hi: usize, pct: u32) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(move |n| {
        proptest::collection::vec(0u32..100, n * (n - 1) / 2)
            .prop_map(move |r| graph_from_bits(n, &r.iter().map(|&x| x < pct).collect::<Vec<_>>()))
    })
}

pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if bits[k] {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|k| mask >> k & 1 == 1).collect();
    graph_from_bits(n, &bits)
}

/// All non-isomorphic graphs on 8 vertices.
pub fn graphs8() -> Vec<Graph> {
    load(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/graphs8.g6"))
}

/// All non-isomorphic graphs on 1 to 8 vertices.
pub fn graphs_upto8() -> Vec<Graph> {
    let mut gs = load(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/graphs_upto7.g6"));
    gs.extend(graphs8());
    gs
}

fn load(path: &str) -> Vec<Graph> {
    std::fs::read_to_string(path)
        .expect("graph data file")
        .lines()
        .map(|l| from_graph6(l).unwrap())
        .collect()
}

fn adj(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|u| (0..g.n()).filter(|&v| g.has_edge(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect()
}

/// Maximum independent set size over all subsets.
pub fn brute_alpha(g: &Graph) -> usize {
    let a = adj(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || a[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn connected_mask(a: &[u32], keep: u32) -> bool {
    if keep == 0 {
        return true;
    }
    let start = keep.trailing_zeros();
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = a[v] & keep & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == keep
}

/// Minimum vertex cut size, `n - 1` for complete graphs.
pub fn brute_kappa(g: &Graph) -> usize {
    let a = adj(g);
    let n = g.n();
    let full = (1u32 << n) - 1;
    (0u32..1 << n)
        .filter(|&s| (s.count_ones() as usize) + 2 <= n && !connected_mask(&a, full & !s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n.saturating_sub(1))
}

/// All-pairs distances; `usize::MAX` when unreachable.
pub fn floyd(g: &Graph, forbidden: &[bool]) -> Vec<Vec<usize>> {
    let n = g.n();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        if forbidden[u] {
            continue;
        }
        d[u][u] = 0;
        for v in 0..n {
            if !forbidden[v] && g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    for row in &mut d {
        for x in row.iter_mut() {
            if *x >= inf {
                *x = usize::MAX;
            }
        }
    }
    d
}

/// Whether `g` has a cycle through exactly `ell` vertices, by plain DFS.
pub fn has_cycle(g: &Graph, ell: usize) -> bool {
    fn go(g: &Graph, path: &mut Vec<usize>, ell: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == ell {
            return g.has_edge(last, path[0]);
        }
        for w in 0..g.n() {
            if w > path[0] && g.has_edge(last, w) && !path.contains(&w) {
                path.push(w);
                if go(g, path, ell) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    ell >= 3 && (0..g.n()).any(|s| go(g, &mut vec![s], ell))
}

/// Whether `set` contains a path on five vertices of `g`.
pub fn has_p5_within(g: &Graph, set: &[usize]) -> bool {
    fn go(g: &Graph, set: &[usize], path: &mut Vec<usize>) -> bool {
        if path.len() == 5 {
            return true;
        }
        let last = *path.last().unwrap();
        for &w in set {
            if g.has_edge(last, w) && !path.contains(&w) {
                path.push(w);
                if go(g, set, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    set.iter().any(|&s| go(g, set, &mut vec![s]))
}
