//! Vertex connectivity, Menger path systems and BFS layering.
//!
//! All flows run on the vertex-split digraph: vertex `v` becomes an arc
//! `v_in -> v_out` of capacity one, and each edge `uv` becomes arcs
//! `u_out -> v_in` and `v_out -> u_in`.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::cycle::Path;
use crate::error::{Error, Result};
use crate::graph::Graph;

const INF: u32 = u32::MAX / 2;

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
}

/// Residual network with paired arcs (`e ^ 1` is the reverse of `e`).
struct FlowNet {
    arcs: Vec<Arc>,
    head: Vec<Vec<usize>>,
    original: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            arcs: Vec::new(),
            head: vec![Vec::new(); nodes],
            original: Vec::new(),
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.head[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.original.push(cap);
        self.head[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
        self.original.push(0);
    }

    /// Augment along shortest paths until `limit` units flow or none remain.
    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut total = 0;
        let mut pred = vec![usize::MAX; self.head.len()];
        while total < limit {
            pred.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut found = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &e in &self.head[x] {
                    let a = self.arcs[e];
                    if a.cap > 0 && a.to != s && pred[a.to] == usize::MAX {
                        pred[a.to] = e;
                        if a.to == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(a.to);
                    }
                }
            }
            if !found {
                break;
            }
            let mut x = t;
            while x != s {
                let e = pred[x];
                self.arcs[e].cap -= 1;
                self.arcs[e ^ 1].cap += 1;
                x = self.arcs[e ^ 1].to;
            }
            total += 1;
        }
        total
    }

    fn flow_on(&self, e: usize) -> u32 {
        self.original[e].saturating_sub(self.arcs[e].cap)
    }

    fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.head[x] {
                let a = self.arcs[e];
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
        seen
    }
}

#[inline]
fn v_in(v: usize) -> usize {
    2 * v
}

#[inline]
fn v_out(v: usize) -> usize {
    2 * v + 1
}

/// Maximum number of internally disjoint `x`–`y` paths, capped at `limit`.
/// `x` and `y` must be distinct and non-adjacent.
pub fn local_connectivity(g: &Graph, x: usize, y: usize, limit: usize) -> usize {
    let n = g.n();
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        if v != x && v != y {
            net.add(v_in(v), v_out(v), 1);
        }
        for w in g.neighbors(v).iter() {
            if v != y && w != x {
                net.add(v_out(v), v_in(w), 1);
            }
        }
    }
    net.max_flow(v_out(x), v_in(y), limit.min(INF as usize) as u32) as usize
}

/// Exact vertex connectivity; `K_n` has connectivity `n - 1`.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Precondition(format!(
            "connectivity needs at least two vertices, got {n}"
        )));
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let v = (0..n).min_by_key(|&v| g.degree(v)).expect("n >= 2");
    let mut best = g.degree(v);
    for w in 0..n {
        if best == 0 {
            break;
        }
        if w != v && !g.has_edge(v, w) {
            best = best.min(local_connectivity(g, v, w, best));
        }
    }
    let nv = g.neighbors(v).to_vec();
    for (i, &a) in nv.iter().enumerate() {
        for &b in &nv[i + 1..] {
            if best == 0 {
                break;
            }
            if !g.has_edge(a, b) {
                best = best.min(local_connectivity(g, a, b, best));
            }
        }
    }
    Ok(best)
}

/// Internally disjoint paths between two vertex sets, with a cut witness when
/// fewer than requested exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub paths: Vec<Path>,
    /// Present iff `paths.len() < k`. Deleting these vertices and edges leaves
    /// no admissible path; `vertices.len() + edges.len() == paths.len()`.
    pub cut: Option<Cut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Cut {
    pub vertices: Vec<usize>,
    /// Direct edges between the two terminal sets.
    pub edges: Vec<(usize, usize)>,
}

/// Up to `k` paths from `a` to `b` whose interiors are pairwise disjoint,
/// avoid `a ∪ b ∪ forbidden`, and whose ends are distinct within each
/// terminal set unless that set is a single vertex.
pub fn disjoint_paths(g: &Graph, a: &VertexSet, b: &VertexSet, k: usize, forbidden: &VertexSet) -> Result<PathSystem> {
    let n = g.n();
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::Precondition("terminal sets must be non-empty".into()));
    }
    if a.intersects(b) {
        return Err(Error::Precondition("terminal sets must be disjoint".into()));
    }
    if a.intersects(forbidden) || b.intersects(forbidden) {
        return Err(Error::Precondition("terminals may not be forbidden".into()));
    }
    let src = 2 * n;
    let sink = 2 * n + 1;
    let mut net = FlowNet::new(2 * n + 2);
    let a_cap = if a.len() == 1 { INF } else { 1 };
    let b_cap = if b.len() == 1 { INF } else { 1 };
    let mut src_arcs = Vec::new();
    for x in a.iter() {
        src_arcs.push((x, net.arcs.len()));
        net.add(src, v_out(x), a_cap);
    }
    for y in b.iter() {
        net.add(v_in(y), sink, b_cap);
    }
    let mut edge_arcs = Vec::new();
    for v in 0..n {
        if forbidden.contains(v) {
            continue;
        }
        let interior = !a.contains(v) && !b.contains(v);
        if interior {
            net.add(v_in(v), v_out(v), 1);
        }
        if b.contains(v) {
            continue;
        }
        for w in g.neighbors(v).iter() {
            if forbidden.contains(w) || a.contains(w) {
                continue;
            }
            if a.contains(v) && b.contains(w) {
                edge_arcs.push((v, w, net.arcs.len()));
                net.add(v_out(v), v_in(w), 1);
            } else {
                net.add(v_out(v), v_in(w), INF);
            }
        }
    }
    let value = net.max_flow(src, sink, k.min(INF as usize - 1) as u32) as usize;

    // Decompose: follow positive-flow arcs from each used source arc.
    let mut paths = Vec::with_capacity(value);
    let mut remaining: Vec<u32> = (0..net.arcs.len()).map(|e| net.flow_on(e)).collect();
    for &(x, e0) in &src_arcs {
        while remaining[e0] > 0 {
            remaining[e0] -= 1;
            let mut verts = vec![x];
            let mut node = v_out(x);
            loop {
                let e = *net.head[node]
                    .iter()
                    .find(|&&e| e % 2 == 0 && remaining[e] > 0)
                    .expect("flow conservation");
                remaining[e] -= 1;
                let to = net.arcs[e].to;
                if to == sink {
                    break;
                }
                if to % 2 == 0 {
                    verts.push(to / 2);
                }
                node = to;
            }
            paths.push(Path::from_vertices(verts));
        }
    }
    debug_assert_eq!(paths.len(), value);

    let cut = if value < k {
        let reach = net.residual_reach(src);
        let mut cut = Cut::default();
        for v in 0..n {
            let interior = !a.contains(v) && !b.contains(v) && !forbidden.contains(v);
            if interior && reach[v_in(v)] && !reach[v_out(v)] {
                cut.vertices.push(v);
            }
        }
        if a_cap == 1 {
            for &(x, _) in &src_arcs {
                if !reach[v_out(x)] {
                    cut.vertices.push(x);
                }
            }
        }
        if b_cap == 1 {
            for y in b.iter() {
                if reach[v_in(y)] {
                    cut.vertices.push(y);
                }
            }
        }
        for &(u, w, _) in &edge_arcs {
            if reach[v_out(u)] && !reach[v_in(w)] {
                cut.edges.push((u, w));
            }
        }
        cut.vertices.sort_unstable();
        Some(cut)
    } else {
        None
    };
    Ok(PathSystem { paths, cut })
}

/// Distance layers of `g - forbidden` around `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsLayers {
    pub source: usize,
    pub layers: Vec<VertexSet>,
}

impl BfsLayers {
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(VertexSet::len).collect()
    }

    /// Index of the layer holding `v`, if reachable.
    pub fn layer_of(&self, v: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(v))
    }
}

pub fn bfs_layers(g: &Graph, source: usize, forbidden: &VertexSet) -> Result<BfsLayers> {
    if source >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: source,
            n: g.n(),
        });
    }
    if forbidden.contains(source) {
        return Err(Error::Precondition(format!("source {source} is forbidden")));
    }
    let mut seen = forbidden.clone();
    seen.insert(source);
    let mut layers = vec![VertexSet::singleton(g.n(), source)];
    loop {
        let mut next = VertexSet::new(g.n());
        for v in layers.last().expect("non-empty").iter() {
            next.union_with(g.neighbors(v));
        }
        next.difference_with(&seen);
        if next.is_empty() {
            break;
        }
        seen.union_with(&next);
        layers.push(next);
    }
    Ok(BfsLayers { source, layers })
}

/// Lexicographically smallest edge inside `s`.
pub fn find_edge_in(g: &Graph, s: &VertexSet) -> Option<(usize, usize)> {
    for u in s.iter() {
        let inside = g.neighbors(u).intersection(s);
        if let Some(v) = inside.iter().find(|&v| v > u) {
            return Some((u, v));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, it: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, it.iter().copied())
    }

    #[test]
    fn connectivity_values() {
        assert_eq!(vertex_connectivity(&Graph::complete_bipartite(3, 3)).unwrap(), 3);
        assert_eq!(vertex_connectivity(&Graph::path(4)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&Graph::cycle(5)).unwrap(), 2);
        assert_eq!(vertex_connectivity(&Graph::complete(6)).unwrap(), 5);
        assert_eq!(vertex_connectivity(&Graph::petersen()).unwrap(), 3);
        assert_eq!(vertex_connectivity(&Graph::empty(3)).unwrap(), 0);
        assert!(vertex_connectivity(&Graph::empty(1)).is_err());
    }

    #[test]
    fn path_systems() {
        let k5 = Graph::complete(5);
        let ps = disjoint_paths(&k5, &set(5, &[0]), &set(5, &[4]), 3, &VertexSet::new(5)).unwrap();
        assert_eq!(ps.paths.len(), 3);
        assert!(ps.cut.is_none());

        let p4 = Graph::path(4);
        let ps = disjoint_paths(&p4, &set(4, &[0]), &set(4, &[3]), 2, &VertexSet::new(4)).unwrap();
        assert_eq!(ps.paths.len(), 1);
        assert_eq!(ps.paths[0].vertices(), &[0, 1, 2, 3]);
        let cut = ps.cut.unwrap();
        assert_eq!(cut.vertices.len() + cut.edges.len(), 1);

        let pg = Graph::petersen();
        let ps = disjoint_paths(&pg, &set(10, &[0]), &set(10, &[5]), 3, &VertexSet::new(10)).unwrap();
        assert_eq!(ps.paths.len(), 3);
        for p in &ps.paths {
            p.validate(&pg).unwrap();
        }
    }

    #[test]
    fn direct_edges_count_once() {
        let k4 = Graph::complete(4);
        let ps = disjoint_paths(&k4, &set(4, &[0]), &set(4, &[1]), 5, &VertexSet::new(4)).unwrap();
        assert_eq!(ps.paths.len(), 3);
        let cut = ps.cut.unwrap();
        assert_eq!(cut.edges, vec![(0, 1)]);
        assert_eq!(cut.vertices, vec![2, 3]);
    }

    #[test]
    fn layers() {
        let c6 = Graph::cycle(6);
        let l = bfs_layers(&c6, 0, &VertexSet::new(6)).unwrap();
        let got: Vec<Vec<usize>> = l.layers.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        let l = bfs_layers(&Graph::complete(4), 0, &VertexSet::new(4)).unwrap();
        assert_eq!(l.layer_sizes(), vec![1, 3]);
        let l = bfs_layers(&Graph::petersen(), 0, &VertexSet::new(10)).unwrap();
        assert_eq!(l.layer_sizes(), vec![1, 3, 6]);
    }

    #[test]
    fn edges_in_sets() {
        let c5 = Graph::cycle(5);
        assert_eq!(find_edge_in(&c5, &set(5, &[0, 1])), Some((0, 1)));
        assert_eq!(find_edge_in(&c5, &set(5, &[0, 2])), None);
        assert_eq!(find_edge_in(&Graph::complete(4), &set(4, &[1, 2, 3])), Some((1, 2)));
    }
}
