//! Bounded exhaustive cycle search, used as the fallback of every pipeline.

use crate::bitset::VertexSet;
use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget for a single fixed-length search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(OrientedCycle),
    /// The search completed: no such cycle exists.
    Absent,
    /// The budget ran out first.
    Unknown,
}

impl SearchOutcome {
    pub fn found(self) -> Option<OrientedCycle> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Looks for a cycle of exactly `ell` vertices inside `within`, rooting each
/// candidate at its smallest vertex.
pub fn find_cycle_within(g: &Graph, ell: usize, within: &VertexSet, budget: u64) -> SearchOutcome {
    if ell < 3 || ell > within.len() {
        return SearchOutcome::Absent;
    }
    let mut dfs = Dfs {
        g,
        ell,
        nodes: 0,
        budget,
        path: Vec::with_capacity(ell),
        on_path: VertexSet::new(g.n()),
        allowed: VertexSet::new(g.n()),
        dist: vec![usize::MAX; g.n()],
    };
    for s in within.iter() {
        let mut allowed = within.clone();
        for v in 0..s {
            allowed.remove(v);
        }
        if allowed.len() < ell {
            break;
        }
        dfs.dist = g.distances_within(s, &allowed);
        dfs.allowed = allowed;
        dfs.path.clear();
        dfs.path.push(s);
        dfs.on_path.clear();
        dfs.on_path.insert(s);
        match dfs.extend() {
            Ok(true) => {
                let c = OrientedCycle::from_sequence(dfs.path.clone()).expect("distinct vertices");
                return SearchOutcome::Found(c);
            }
            Ok(false) => {}
            Err(()) => return SearchOutcome::Unknown,
        }
    }
    SearchOutcome::Absent
}

pub fn find_cycle(g: &Graph, ell: usize, budget: u64) -> SearchOutcome {
    find_cycle_within(g, ell, &g.all_vertices(), budget)
}

struct Dfs<'a> {
    g: &'a Graph,
    ell: usize,
    nodes: u64,
    budget: u64,
    path: Vec<usize>,
    on_path: VertexSet,
    allowed: VertexSet,
    dist: Vec<usize>,
}

impl Dfs<'_> {
    fn extend(&mut self) -> std::result::Result<bool, ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let s = self.path[0];
        let cur = *self.path.last().expect("non-empty");
        if self.path.len() == self.ell {
            return Ok(self.g.has_edge(cur, s));
        }
        let remaining = self.ell - self.path.len();
        let mut next = self.g.neighbors(cur).intersection(&self.allowed);
        next.difference_with(&self.on_path);
        for w in next.iter() {
            // After stepping to w, `remaining - 1` more vertices then the
            // closing edge: w must be within `remaining` of s.
            if self.dist[w] > remaining {
                continue;
            }
            // Break the reflection symmetry: the second vertex is smaller
            // than the last.
            if self.path.len() == self.ell - 1 && self.path.len() >= 2 && w < self.path[1] {
                continue;
            }
            self.path.push(w);
            self.on_path.insert(w);
            if self.extend()? {
                return Ok(true);
            }
            self.on_path.remove(w);
            self.path.pop();
        }
        Ok(false)
    }
}

/// Shortest cycle in `g`, preferring the lexicographically smallest closing
/// edge among equal lengths.
pub fn shortest_cycle(g: &Graph) -> Option<OrientedCycle> {
    let all = g.all_vertices();
    let mut best: Option<Vec<usize>> = None;
    for (a, b) in g.edges() {
        // Shortest a-b path avoiding the edge ab itself.
        let mut parent = vec![usize::MAX; g.n()];
        parent[a] = a;
        let mut queue = std::collections::VecDeque::from([a]);
        let mut found = false;
        'bfs: while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x).iter() {
                if parent[y] != usize::MAX || (x == a && y == b) || !all.contains(y) {
                    continue;
                }
                parent[y] = x;
                if y == b {
                    found = true;
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }
        if !found {
            continue;
        }
        let mut cyc = vec![b];
        let mut c = b;
        while c != a {
            c = parent[c];
            cyc.push(c);
        }
        if best.as_ref().is_none_or(|bst| cyc.len() < bst.len()) {
            best = Some(cyc);
        }
        if best.as_ref().map(Vec::len) == Some(3) {
            break;
        }
    }
    best.map(|c| OrientedCycle::from_sequence(c).expect("simple cycle"))
}

/// [`find_cycle`] that turns the non-found outcomes into errors.
pub fn require_cycle(g: &Graph, ell: usize, budget: u64) -> Result<OrientedCycle> {
    match find_cycle(g, ell, budget) {
        SearchOutcome::Found(c) => Ok(c),
        SearchOutcome::Absent => Err(Error::NotFound(format!("no cycle of length {ell}"))),
        SearchOutcome::Unknown => Err(Error::BudgetExceeded {
            what: "cycle search",
            budget,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::validate_cycle;

    #[test]
    fn fixed_lengths() {
        let p = Graph::petersen();
        for ell in 3..=10 {
            let out = find_cycle(&p, ell, DEFAULT_SEARCH_BUDGET);
            let expect = matches!(ell, 5 | 6 | 8 | 9);
            match out {
                SearchOutcome::Found(c) => {
                    assert!(expect, "unexpected {ell}-cycle");
                    assert_eq!(c.len(), ell);
                    validate_cycle(&p, &c).unwrap();
                }
                SearchOutcome::Absent => assert!(!expect, "missed {ell}-cycle"),
                SearchOutcome::Unknown => panic!("budget"),
            }
        }
    }

    #[test]
    fn unknown_is_distinct() {
        assert_eq!(find_cycle(&Graph::petersen(), 10, 3), SearchOutcome::Unknown);
    }

    #[test]
    fn girth() {
        assert_eq!(shortest_cycle(&Graph::petersen()).unwrap().len(), 5);
        assert_eq!(shortest_cycle(&Graph::complete_bipartite(3, 3)).unwrap().len(), 4);
        assert_eq!(shortest_cycle(&Graph::complete(5)).unwrap().vertices(), &[0, 1, 2]);
        assert!(shortest_cycle(&Graph::path(5)).is_none());
    }
}
