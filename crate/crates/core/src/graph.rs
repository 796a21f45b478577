//! Immutable simple undirected graphs over `0..n` with bitset adjacency rows.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::connectivity::vertex_connectivity;
use crate::error::{Error, Result};
use crate::independence::{independence_number_with_budget, DEFAULT_NODE_BUDGET};

/// Default cap on the number of vertices accepted by constructors.
pub const DEFAULT_VERTEX_LIMIT: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges_with_limit(n, edges, DEFAULT_VERTEX_LIMIT)
    }

    pub fn from_edges_with_limit<I>(n: usize, edges: I, limit: usize) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > limit {
            return Err(Error::TooManyVertices { n, limit });
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        for (u, row) in rows.iter().enumerate() {
            if row.universe() != n {
                return Err(Error::InvalidGraph(format!(
                    "row {u} has universe {} but graph has {n} vertices",
                    row.universe()
                )));
            }
            if row.contains(u) {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            for v in row.iter() {
                if !rows[v].contains(u) {
                    return Err(Error::InvalidGraph(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u] = VertexSet::full(n);
            g.adj[u].remove(u);
        }
        g
    }

    /// The cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle graph needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge_unchecked(i, (i + 1) % n);
        }
        g
    }

    /// The path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge_unchecked(i - 1, i);
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge_unchecked(i, (i + 1) % 5);
            g.add_edge_unchecked(i, i + 5);
            g.add_edge_unchecked(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// Wheel with rim `0..k` and hub `k`.
    pub fn wheel(k: usize) -> Self {
        let mut g = Graph::cycle(k);
        g.n += 1;
        let mut adj: Vec<VertexSet> = (0..=k).map(|_| VertexSet::new(k + 1)).collect();
        for (u, row) in g.adj.iter().enumerate() {
            for v in row.iter() {
                adj[u].insert(v);
            }
        }
        g.adj = adj;
        for i in 0..k {
            g.add_edge_unchecked(i, k);
        }
        g
    }

    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for i in 1..=leaves {
            g.add_edge_unchecked(0, i);
        }
        g
    }

    /// Complement of a perfect matching `{2i, 2i+1}` on `n` (even) vertices.
    pub fn cocktail_party(n: usize) -> Self {
        let mut g = Graph::complete(n);
        for i in (0..n.saturating_sub(1)).step_by(2) {
            g.adj[i].remove(i + 1);
            g.adj[i + 1].remove(i);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, it: I) -> VertexSet {
        VertexSet::from_iter(self.n, it)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            let mut row = self.adj[u].complement();
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    /// Same vertex indexing with every edge touching `removed` deleted.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Graph {
        let keep = removed.complement();
        let mut g = self.clone();
        for u in 0..self.n {
            if removed.contains(u) {
                g.adj[u].clear();
            } else {
                g.adj[u].intersect_with(&keep);
            }
        }
        g
    }

    /// Induced subgraph relabelled to `0..|keep|`; the returned vector maps new
    /// indices back to the original vertices.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.to_vec();
        let mut inv = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let mut g = Graph::empty(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = inv[w];
                if j != usize::MAX {
                    g.adj[i].insert(j);
                }
            }
        }
        (g, map)
    }

    /// Subgraph on the same vertex set keeping only the listed edges.
    pub fn spanning_subgraph<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(self.n);
        for (u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("{u}-{v} is not an edge")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Connected components of `G[within]`, each as a vertex set, ordered by
    /// smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for s in within.iter() {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach_within(s, within);
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `G[within]` (`s` is always included).
    pub fn reach_within(&self, s: usize, within: &VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(self.n, s);
        let mut frontier = comp.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(self.n);
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(within);
            next.difference_with(&comp);
            comp.union_with(&next);
            frontier = next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach_within(0, &self.all_vertices()).len() == self.n
    }

    /// Shortest `from`–`to` path whose vertices all lie in `allowed`
    /// (the endpoints are always allowed). Ties break towards smaller indices.
    pub fn shortest_path_within(&self, from: usize, to: usize, allowed: &VertexSet) -> Option<Vec<usize>> {
        if from == to {
            return Some(vec![from]);
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if parent[w] != usize::MAX {
                    continue;
                }
                if w != to && !allowed.contains(w) {
                    continue;
                }
                parent[w] = u;
                if w == to {
                    let mut path = vec![to];
                    let mut c = to;
                    while c != from {
                        c = parent[c];
                        path.push(c);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
        None
    }

    /// BFS distances from `s` inside `allowed` (`usize::MAX` = unreachable).
    pub fn distances_within(&self, s: usize, allowed: &VertexSet) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if dist[w] == usize::MAX && allowed.contains(w) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Lexicographically smallest triangle.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                let common = self.adj[u].intersection(&self.adj[v]);
                if let Some(w) = common.iter().find(|&w| w > v) {
                    return Some([u, v, w]);
                }
            }
        }
        None
    }

    /// True when `G[set]` is a forest.
    pub fn is_forest_within(&self, set: &VertexSet) -> bool {
        let comps = self.components_within(set);
        let edges: usize = set.iter().map(|v| self.adj[v].intersection_len(set)).sum::<usize>() / 2;
        edges + comps.len() == set.len()
    }
}

/// The invariants that govern the cycle-length machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionProfile {
    pub n: usize,
    pub alpha: usize,
    pub kappa: usize,
    pub min_degree: usize,
}

impl ConditionProfile {
    pub fn compute(g: &Graph) -> Result<Self> {
        Self::compute_with_budget(g, DEFAULT_NODE_BUDGET)
    }

    pub fn compute_with_budget(g: &Graph, alpha_budget: u64) -> Result<Self> {
        let alpha = independence_number_with_budget(g, alpha_budget)?;
        let kappa = if g.n() >= 2 { vertex_connectivity(g)? } else { 0 };
        Ok(ConditionProfile {
            n: g.n(),
            alpha,
            kappa,
            min_degree: g.min_degree(),
        })
    }

    /// `κ > α`, the pancyclicity hypothesis.
    pub fn kappa_exceeds_alpha(&self) -> bool {
        self.kappa > self.alpha
    }

    /// `κ ≥ α`, the Hamiltonicity hypothesis.
    pub fn kappa_at_least_alpha(&self) -> bool {
        self.kappa >= self.alpha
    }

    pub fn min_degree_exceeds_alpha(&self) -> bool {
        self.min_degree > self.alpha
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::cycle(6).edge_count(), 6);
        assert_eq!(Graph::petersen().edge_count(), 15);
        assert!((0..10).all(|v| Graph::petersen().degree(v) == 3));
        let w = Graph::wheel(5);
        assert_eq!(w.n(), 6);
        assert_eq!(w.degree(5), 5);
        assert_eq!(w.edge_count(), 10);
        assert_eq!(Graph::cocktail_party(12).min_degree(), 10);
        assert_eq!(Graph::complete_bipartite(3, 3).edge_count(), 9);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(matches!(
            Graph::from_edges_with_limit(10, [], 5),
            Err(Error::TooManyVertices { .. })
        ));
        let mut rows = vec![VertexSet::new(2), VertexSet::new(2)];
        rows[0].insert(1);
        assert!(Graph::from_rows(rows).is_err());
    }

    #[test]
    fn induced_and_components() {
        let g = Graph::cycle(6);
        let keep = g.vertex_set([0, 1, 3, 4]);
        let comps = g.components_within(&keep);
        assert_eq!(comps.len(), 2);
        let (h, map) = g.induced_subgraph(&keep);
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(h.edge_count(), 2);
        assert!(g.is_forest_within(&keep));
        assert!(!g.is_forest_within(&g.all_vertices()));
        let d = g.delete_vertices(&g.vertex_set([0]));
        assert_eq!(d.degree(0), 0);
        assert_eq!(d.edge_count(), 4);
    }

    #[test]
    fn shortest_paths() {
        let g = Graph::cycle(6);
        let all = g.all_vertices();
        assert_eq!(g.shortest_path_within(0, 3, &all), Some(vec![0, 1, 2, 3]));
        let no1 = all.difference(&g.vertex_set([1]));
        assert_eq!(g.shortest_path_within(0, 3, &no1), Some(vec![0, 5, 4, 3]));
        assert_eq!(g.find_triangle(), None);
        assert_eq!(Graph::complete(4).find_triangle(), Some([0, 1, 2]));
    }
}
