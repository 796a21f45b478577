//! Independent cycle-existence oracles: a pruned DFS and a trace-based
//! inclusion-exclusion count.

use std::collections::BTreeMap;

use pancyclic::{Error, Graph, OrientedCycle, Result};
use serde::{Deserialize, Serialize};

/// Default DFS node budget for the oracle.
pub const ORACLE_BUDGET: u64 = 50_000_000;

/// Largest graph the trace count accepts.
pub const TRACE_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OracleAnswer {
    Found(OrientedCycle),
    /// The search completed without a cycle.
    None,
    /// The budget ran out first.
    Unknown,
}

impl OracleAnswer {
    pub fn is_found(&self) -> bool {
        matches!(self, OracleAnswer::Found(_))
    }

    /// `Some(exists)` when the answer is exact.
    pub fn exists(&self) -> Option<bool> {
        match self {
            OracleAnswer::Found(_) => Some(true),
            OracleAnswer::None => Some(false),
            OracleAnswer::Unknown => None,
        }
    }
}

struct Search<'a> {
    adj: Vec<Vec<usize>>,
    g: &'a Graph,
    ell: usize,
    start: usize,
    dist: Vec<usize>,
    path: Vec<usize>,
    on: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Err(())` on budget exhaustion.
    fn go(&mut self) -> std::result::Result<bool, ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let last = *self.path.last().expect("non-empty");
        if self.path.len() == self.ell {
            return Ok(self.g.has_edge(last, self.start));
        }
        let left = self.ell - self.path.len();
        for i in 0..self.adj[last].len() {
            let w = self.adj[last][i];
            if self.on[w] || self.dist[w] > left {
                continue;
            }
            // Fix the orientation: the second vertex is below the last one.
            if self.path.len() + 1 == self.ell && w < self.path[1] {
                continue;
            }
            self.path.push(w);
            self.on[w] = true;
            if self.go()? {
                return Ok(true);
            }
            self.on[w] = false;
            self.path.pop();
        }
        Ok(false)
    }
}

/// A cycle through exactly `ell` vertices, by DFS from each possible least
/// vertex; vertices of degree below 2 and vertices too far from the start
/// to close in time are pruned.
pub fn brute_find_cycle(g: &Graph, ell: usize, budget: u64) -> Result<OracleAnswer> {
    let n = g.n();
    if ell < 3 || ell > n {
        return Err(Error::Precondition(format!("length {ell} outside [3, {n}]")));
    }
    let mut nodes = 0;
    for start in 0..n {
        if n - start < ell || g.degree(start) < 2 {
            continue;
        }
        let alive: Vec<bool> = (0..n).map(|v| v >= start && g.degree(v) >= 2).collect();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|v| g.neighbors(v).iter().filter(|&w| alive[w]).collect())
            .collect();
        // Distances back to the start inside the alive vertices.
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut on = vec![false; n];
        on[start] = true;
        let mut s = Search {
            adj,
            g,
            ell,
            start,
            dist,
            path: vec![start],
            on,
            nodes,
            budget,
        };
        match s.go() {
            Ok(true) => return Ok(OracleAnswer::Found(OrientedCycle::new(g, s.path)?)),
            Ok(false) => nodes = s.nodes,
            Err(()) => return Ok(OracleAnswer::Unknown),
        }
    }
    Ok(OracleAnswer::None)
}

/// Oracle answer for every length in `[3, n]`.
pub fn is_pancyclic_brute(g: &Graph, budget: u64) -> BTreeMap<usize, OracleAnswer> {
    (3..=g.n())
        .map(|ell| (ell, brute_find_cycle(g, ell, budget).expect("length in range")))
        .collect()
}

/// Whether every answer is an exact `Found`.
pub fn all_found(answers: &BTreeMap<usize, OracleAnswer>) -> bool {
    answers.values().all(OracleAnswer::is_found)
}

fn mat_mul(a: &[i64], b: &[i64], t: usize) -> Vec<i64> {
    let mut c = vec![0i64; t * t];
    for i in 0..t {
        for k in 0..t {
            let x = a[i * t + k];
            if x == 0 {
                continue;
            }
            for j in 0..t {
                c[i * t + j] += x * b[k * t + j];
            }
        }
    }
    c
}

/// Number of cycles of each length `3..=max_len`, from
/// `C_k = (1/2k) Σ_{T ⊆ V, |T| <= k} (-1)^{k-|T|} C(n-|T|, k-|T|) tr(A_T^k)`:
/// closed `k`-walks inside `T`, sieved down to those covering exactly `k`
/// vertices, which are the `k`-cycles counted `2k` times.
pub fn cycle_counts_trace(g: &Graph, max_len: usize) -> Result<Vec<u128>> {
    let n = g.n();
    if n > TRACE_MAX_N {
        return Err(Error::Precondition(format!(
            "trace count limited to n <= {TRACE_MAX_N}, got {n}"
        )));
    }
    let max_len = max_len.min(n);
    let binom = |a: usize, b: usize| -> i128 {
        if b > a {
            return 0;
        }
        (0..b).fold(1i128, |acc, i| acc * (a - i) as i128 / (i + 1) as i128)
    };
    let mut sums = vec![0i128; max_len + 1];
    for mask in 1u32..1 << n {
        let t = mask.count_ones() as usize;
        if t > max_len {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let a: Vec<i64> = vs
            .iter()
            .flat_map(|&u| vs.iter().map(move |&v| (u, v)))
            .map(|(u, v)| i64::from(g.has_edge(u, v)))
            .collect();
        let mut pow = a.clone();
        for k in 2..=max_len {
            pow = mat_mul(&pow, &a, t);
            if k < t.max(3) {
                continue;
            }
            let tr: i128 = (0..t).map(|i| pow[i * t + i] as i128).sum();
            let sign = if (k - t) % 2 == 0 { 1 } else { -1 };
            sums[k] += sign * binom(n - t, k - t) * tr;
        }
    }
    Ok((3..=max_len)
        .map(|k| {
            let total = sums[k];
            debug_assert!(total >= 0 && total % (2 * k as i128) == 0);
            (total / (2 * k as i128)) as u128
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_graph() {
        let g = Graph::cycle(6);
        assert!(brute_find_cycle(&g, 6, ORACLE_BUDGET).unwrap().is_found());
        assert_eq!(brute_find_cycle(&g, 5, ORACLE_BUDGET).unwrap(), OracleAnswer::None);
    }

    #[test]
    fn petersen_is_hypohamiltonian() {
        let g = Graph::petersen();
        assert!(brute_find_cycle(&g, 5, ORACLE_BUDGET).unwrap().is_found());
        assert_eq!(brute_find_cycle(&g, 10, ORACLE_BUDGET).unwrap(), OracleAnswer::None);
    }

    #[test]
    fn pancyclic_folds() {
        let found = |g: &Graph| -> Vec<usize> {
            is_pancyclic_brute(g, ORACLE_BUDGET)
                .into_iter()
                .filter(|(_, a)| a.is_found())
                .map(|(l, _)| l)
                .collect()
        };
        assert_eq!(found(&Graph::complete(5)), vec![3, 4, 5]);
        assert_eq!(found(&Graph::cycle(6)), vec![6]);
        assert_eq!(found(&Graph::complete_bipartite(3, 3)), vec![4, 6]);
    }

    #[test]
    fn tiny_budget_is_unknown() {
        let g = Graph::petersen();
        assert_eq!(brute_find_cycle(&g, 10, 5).unwrap(), OracleAnswer::Unknown);
    }

    #[test]
    fn trace_counts_known_graphs() {
        // K5: C(5,k)(k-1)!/2 cycles of length k.
        assert_eq!(cycle_counts_trace(&Graph::complete(5), 5).unwrap(), vec![10, 15, 12]);
        assert_eq!(cycle_counts_trace(&Graph::cycle(7), 7).unwrap(), vec![0, 0, 0, 0, 1]);
        // Petersen: 12 five-, 10 six- and 15 eight-cycles.
        let p = cycle_counts_trace(&Graph::petersen(), 8).unwrap();
        assert_eq!(p, vec![0, 0, 12, 10, 0, 15]);
    }
}
