//! Even cycles in dense graphs.

use crate::bitset::VertexSet;
use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default node budget for [`find_even_cycle`].
pub const DEFAULT_EVEN_BUDGET: u64 = 50_000_000;

/// Integer `r` with `r^ell == n`, if any.
fn exact_root(n: usize, ell: u32) -> Option<usize> {
    let guess = (n as f64).powf(1.0 / ell as f64).round() as usize;
    (guess.saturating_sub(1)..=guess + 1).find(|&r| r.checked_pow(ell) == Some(n))
}

/// `⌈max{20ℓ n^{1+1/ℓ}, 200nℓ}⌉`, the edge count above which a `2ℓ`-cycle is
/// guaranteed.
pub fn even_cycle_threshold(ell: usize, n: usize) -> Result<u64> {
    if ell == 0 {
        return Err(Error::Precondition("ell must be at least 1".into()));
    }
    let linear = 200 * n as u64 * ell as u64;
    let power = match exact_root(n, ell as u32) {
        Some(r) => 20 * ell as u64 * n as u64 * r as u64,
        None => (20.0 * ell as f64 * (n as f64).powf(1.0 + 1.0 / ell as f64)).ceil() as u64,
    };
    Ok(linear.max(power))
}

/// A cycle of length exactly `two_ell`. Edges are tried by descending degree
/// sum; once an edge is exhausted it is deleted for the remaining searches.
pub fn find_even_cycle(g: &Graph, two_ell: usize, budget: u64) -> Result<OrientedCycle> {
    if two_ell < 4 || two_ell % 2 != 0 {
        return Err(Error::Precondition(format!(
            "length {two_ell} is not an even number >= 4"
        )));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_by_key(|&(a, b)| (std::cmp::Reverse(g.degree(a) + g.degree(b)), a, b));
    let mut rows: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
    let mut nodes = 0u64;
    for (a, b) in edges {
        rows[a].remove(b);
        rows[b].remove(a);
        let dist = bfs(&rows, a);
        if dist[b] == usize::MAX || dist[b] + 1 > two_ell {
            continue;
        }
        let mut path = vec![a, b];
        let mut on = VertexSet::from_iter(g.n(), [a, b]);
        match extend(&rows, &dist, two_ell, &mut path, &mut on, &mut nodes, budget) {
            Some(true) => return Ok(OrientedCycle::new(g, path)?),
            Some(false) => {}
            None => {
                return Err(Error::BudgetExceeded {
                    what: "even cycle search",
                    budget,
                })
            }
        }
    }
    Err(Error::NotFound(format!("no cycle of length {two_ell}")))
}

fn bfs(rows: &[VertexSet], s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; rows.len()];
    dist[s] = 0;
    let mut q = std::collections::VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for y in rows[x].iter() {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    dist
}

/// Extends `path` (starting at its first vertex `a`) to `len` vertices ending
/// next to `a`; `None` when the budget runs out.
fn extend(
    rows: &[VertexSet],
    dist: &[usize],
    len: usize,
    path: &mut Vec<usize>,
    on: &mut VertexSet,
    nodes: &mut u64,
    budget: u64,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    let a = path[0];
    let cur = *path.last().expect("non-empty");
    if path.len() == len {
        return Some(rows[cur].contains(a));
    }
    let remaining = len - path.len();
    let mut next = rows[cur].clone();
    next.difference_with(on);
    for w in next.iter() {
        if dist[w] > remaining {
            continue;
        }
        path.push(w);
        on.insert(w);
        if extend(rows, dist, len, path, on, nodes, budget)? {
            return Some(true);
        }
        on.remove(w);
        path.pop();
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::validate_cycle;

    #[test]
    fn thresholds() {
        assert_eq!(even_cycle_threshold(3, 100).unwrap(), 60000);
        assert_eq!(even_cycle_threshold(1, 10).unwrap(), 2000);
        assert_eq!(even_cycle_threshold(2, 10_000).unwrap(), 40_000_000);
        assert!(even_cycle_threshold(0, 5).is_err());
    }

    #[test]
    fn finds_or_reports() {
        let k = Graph::complete_bipartite(4, 4);
        let c = find_even_cycle(&k, 8, DEFAULT_EVEN_BUDGET).unwrap();
        assert_eq!(c.len(), 8);
        validate_cycle(&k, &c).unwrap();
        assert!(matches!(
            find_even_cycle(&Graph::cycle(6), 4, DEFAULT_EVEN_BUDGET),
            Err(Error::NotFound(_))
        ));
        assert!(find_even_cycle(&k, 5, DEFAULT_EVEN_BUDGET).is_err());
        assert!(matches!(
            find_even_cycle(&Graph::complete(12), 8, 2),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
