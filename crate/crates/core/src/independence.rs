//! Exact maximum independent sets by branch and bound.
//!
//! Candidates are ordered by a greedy partition into cliques of `g`; the
//! number of cliques needed to cover a candidate set bounds how many of its
//! vertices an independent set can use.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default number of search nodes before giving up.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn independence_number_with_budget(g: &Graph, budget: u64) -> Result<usize> {
    Ok(max_independent_set_with_budget(g, &g.all_vertices(), budget)?.len())
}

/// A maximum independent set of `g[s]`.
pub fn max_independent_set_in(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    max_independent_set_with_budget(g, s, DEFAULT_NODE_BUDGET)
}

pub fn max_independent_set_with_budget(g: &Graph, s: &VertexSet, budget: u64) -> Result<VertexSet> {
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut search = Search {
        g,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
    };
    // Seed with a greedy solution so pruning starts early.
    let mut rest = s.clone();
    while let Some(v) = min_degree_in(g, &rest) {
        search.best.push(v);
        rest.remove(v);
        rest.difference_with(g.neighbors(v));
    }
    search.expand(s.clone())?;
    Ok(VertexSet::from_iter(g.n(), search.best.iter().copied()))
}

fn min_degree_in(g: &Graph, s: &VertexSet) -> Option<usize> {
    s.iter().min_by_key(|&v| g.neighbors(v).intersection_len(s))
}

struct Search<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn expand(&mut self, mut cand: VertexSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                what: "independence number search",
                budget: self.budget,
            });
        }
        let (order, bounds) = self.clique_cover_order(&cand);
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            self.current.push(v);
            let mut next = cand.clone();
            next.remove(v);
            next.difference_with(self.g.neighbors(v));
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            cand.remove(v);
        }
        Ok(())
    }

    /// Vertices of `cand` listed clique by clique, with the running clique
    /// count as an upper bound for each prefix.
    fn clique_cover_order(&self, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.len());
        let mut bounds = Vec::with_capacity(cand.len());
        let mut uncovered = cand.clone();
        let mut k = 0;
        while !uncovered.is_empty() {
            k += 1;
            let mut q = uncovered.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.intersect_with(self.g.neighbors(v));
                uncovered.remove(v);
                order.push(v);
                bounds.push(k);
            }
        }
        (order, bounds)
    }
}

/// True when no two vertices of `s` are adjacent.
pub fn is_independent(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| !g.neighbors(v).intersects(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&mask| {
                (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || !g.has_edge(u, v)))
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn named_values() {
        assert_eq!(independence_number(&Graph::complete(5)).unwrap(), 1);
        assert_eq!(independence_number(&Graph::cycle(5)).unwrap(), 2);
        let p = Graph::petersen();
        assert_eq!(brute_alpha(&p), 4);
        assert_eq!(independence_number(&p).unwrap(), 4);
    }

    #[test]
    fn restricted_sets() {
        let k4 = Graph::complete(4);
        assert_eq!(max_independent_set_in(&k4, &k4.all_vertices()).unwrap().len(), 1);
        let c6 = Graph::cycle(6);
        let s = max_independent_set_in(&c6, &c6.all_vertices()).unwrap();
        assert_eq!(s.len(), 3);
        assert!(is_independent(&c6, &s));
        let p = Graph::petersen();
        let nv = p.neighbors(0).clone();
        assert_eq!(max_independent_set_in(&p, &nv).unwrap(), nv);
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::cycle(40);
        assert!(matches!(
            independence_number_with_budget(&g, 0),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn empty_graph() {
        assert_eq!(independence_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(independence_number(&Graph::empty(7)).unwrap(), 7);
    }
}
