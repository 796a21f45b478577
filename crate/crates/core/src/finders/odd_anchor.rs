//! A subgraph `H` whose every edge lies on a triangle or 5-cycle of the host
//! graph meeting `V(H)` only in that edge's endpoints.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::finders::short_cycles::greedy_matching;
use crate::graph::Graph;
use crate::independence::independence_number;

/// Default number of sampled vertex sets before giving up.
pub const DEFAULT_RETRY_BUDGET: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddAnchorSubgraph {
    /// The sampled vertex set `X = V(H)`.
    pub vertices: Vec<usize>,
    /// Edges of `H`, each as `(min, max)`.
    pub host_edges: Vec<(usize, usize)>,
    /// Anchor cycle for every edge of `H`.
    pub anchors: BTreeMap<(usize, usize), OrientedCycle>,
    /// Size of the tuple family the sample was drawn against.
    pub family_size: usize,
    /// Samples drawn, including the successful one.
    pub attempts: u32,
}

impl OddAnchorSubgraph {
    /// Edges of `H` whose anchor has length `len` (3 or 5).
    pub fn split(&self, len: usize) -> Vec<(usize, usize)> {
        self.host_edges
            .iter()
            .copied()
            .filter(|e| self.anchors[e].len() == len)
            .collect()
    }

    /// Checks every anchor literally against the host graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let x = g.vertex_set(self.vertices.iter().copied());
        for &(a, b) in &self.host_edges {
            let c = self
                .anchors
                .get(&(a, b))
                .ok_or_else(|| Error::Precondition(format!("edge ({a},{b}) has no anchor")))?;
            crate::cycle::validate_cycle(g, c).map_err(Error::InvalidCycle)?;
            if !(c.len() == 3 || c.len() == 5) {
                return Err(Error::Precondition(format!(
                    "anchor of ({a},{b}) has length {}",
                    c.len()
                )));
            }
            if !c.has_cycle_edge(a, b) {
                return Err(Error::Precondition(format!("anchor misses its edge ({a},{b})")));
            }
            if !x.contains(a) || !x.contains(b) {
                return Err(Error::Precondition(format!("edge ({a},{b}) leaves V(H)")));
            }
            let meet = c.vertex_set(g.n()).intersection(&x);
            if meet.len() != 2 {
                return Err(Error::Precondition(format!(
                    "anchor of ({a},{b}) meets V(H) in {:?}",
                    meet.to_vec()
                )));
            }
        }
        Ok(())
    }
}

/// Requires `δ(g) > α(g)`.
pub fn odd_anchor_subgraph(g: &Graph, seed: u64) -> Result<OddAnchorSubgraph> {
    let alpha = independence_number(g)?;
    if g.min_degree() <= alpha {
        return Err(Error::Precondition(format!(
            "minimum degree {} does not exceed independence number {alpha}",
            g.min_degree()
        )));
    }
    odd_anchor_subgraph_with(g, alpha, seed, DEFAULT_RETRY_BUDGET)
}

/// The construction without the degree check; `alpha` sets the thresholds.
pub fn odd_anchor_subgraph_with(g: &Graph, alpha: usize, seed: u64, retries: u32) -> Result<OddAnchorSubgraph> {
    let family = tuple_family(g, alpha);
    if family.is_empty() {
        return Err(Error::Infeasible("the tuple family is empty".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=retries {
        let x = VertexSet::from_iter(g.n(), (0..g.n()).filter(|_| rng.gen_bool(0.5)));
        let mut anchors = BTreeMap::new();
        let mut pairs = 0usize;
        for t in &family {
            if !(x.contains(t[0]) && x.contains(t[1])) || t[2..].iter().any(|&v| x.contains(v)) {
                continue;
            }
            pairs += 1;
            let key = (t[0].min(t[1]), t[0].max(t[1]));
            anchors
                .entry(key)
                .or_insert_with(|| OrientedCycle::from_sequence(t.clone()).expect("validated tuple"));
        }
        if pairs >= 1 && 32 * pairs >= family.len() {
            let h = OddAnchorSubgraph {
                vertices: x.to_vec(),
                host_edges: anchors.keys().copied().collect(),
                anchors,
                family_size: family.len(),
                attempts: attempt,
            };
            debug_assert!(h.validate(g).is_ok());
            return Ok(h);
        }
    }
    Err(Error::BudgetExceeded {
        what: "odd anchor sampling",
        budget: retries as u64,
    })
}

/// Ordered tuples whose closure is a triangle or 5-cycle of `g`. At most one
/// tuple per ordered (first, second) pair.
pub fn tuple_family(g: &Graph, alpha: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let matchings: Vec<Vec<(usize, usize)>> = (0..n).map(|u| greedy_matching(g, g.neighbors(u))).collect();
    let indep: Vec<VertexSet> = (0..n)
        .map(|u| {
            let mut s = g.neighbors(u).clone();
            for &(a, b) in &matchings[u] {
                s.remove(a);
                s.remove(b);
            }
            s
        })
        .collect();
    let u1: Vec<bool> = (0..n).map(|u| 12 * matchings[u].len() >= alpha).collect();
    let mut family = Vec::new();
    let mut in_u2 = vec![false; n];
    for u in 0..n {
        if u1[u] {
            for &(x, y) in &matchings[u] {
                family.push(vec![u, x, y]);
                family.push(vec![u, y, x]);
            }
            continue;
        }
        // Triangle (u v w) with v outside U1.
        let witness = g
            .neighbors(u)
            .iter()
            .filter(|&v| !u1[v])
            .find_map(|v| g.neighbors(u).intersection(g.neighbors(v)).first().map(|w| (v, w)));
        if let Some((v, w)) = witness {
            in_u2[u] = true;
            let common = indep[u].intersection(&indep[v]);
            if 12 * common.len() >= alpha && !common.is_empty() {
                family.extend(common.iter().filter(|&x| x != w).map(|x| vec![u, x, v]));
            } else {
                let excl = [u, v, w];
                for (x, y) in cross_matching(g, &indep[u], &indep[v], &excl) {
                    family.push(vec![u, x, y, v, w]);
                }
            }
        }
    }
    for u in 0..n {
        if u1[u] || in_u2[u] {
            continue;
        }
        // Triangle (v w x) with v outside U1 and uw an edge.
        let witness = g.neighbors(u).iter().find_map(|w| {
            g.neighbors(w).iter().filter(|&v| v != u && !u1[v]).find_map(|v| {
                g.neighbors(v)
                    .intersection(g.neighbors(w))
                    .iter()
                    .find(|&x| x != u)
                    .map(|x| (v, w, x))
            })
        });
        let Some((v, w, x)) = witness else { continue };
        let excl = [u, v, w, x];
        let common = indep[u].intersection(&indep[v]);
        if 12 * common.len() >= alpha && !common.is_empty() {
            family.extend(common.iter().filter(|y| !excl.contains(y)).map(|y| vec![u, y, v, x, w]));
        } else {
            for (y, z) in cross_matching(g, &indep[u], &indep[v], &excl) {
                family.push(vec![u, y, z, v, w]);
            }
        }
    }
    family.retain(|t| OrientedCycle::new(g, t.clone()).is_ok());
    family
}

/// Greedy matching between `a` and `b` avoiding `excl`.
fn cross_matching(g: &Graph, a: &VertexSet, b: &VertexSet, excl: &[usize]) -> Vec<(usize, usize)> {
    let mut used: Vec<usize> = excl.to_vec();
    let mut m = Vec::new();
    for x in a.iter() {
        if used.contains(&x) {
            continue;
        }
        if let Some(y) = g.neighbors(x).intersection(b).iter().find(|y| !used.contains(y)) {
            used.extend([x, y]);
            m.push((x, y));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_has_triangle_anchors() {
        let g = Graph::complete(9);
        let h = odd_anchor_subgraph(&g, 7).unwrap();
        assert!(!h.host_edges.is_empty());
        h.validate(&g).unwrap();
        assert!(h.anchors.values().all(|c| c.len() == 3));
        assert_eq!(h.split(5), vec![]);
    }

    #[test]
    fn triangle_free_fails_honestly() {
        let g = Graph::cycle(10);
        assert!(odd_anchor_subgraph(&g, 1).is_err());
        assert!(matches!(
            odd_anchor_subgraph_with(&g, 5, 1, 8),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn first_two_entries_unique() {
        let g = Graph::cocktail_party(14);
        let fam = tuple_family(&g, 2);
        let mut keys: Vec<_> = fam.iter().map(|t| (t[0], t[1])).collect();
        let len = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), len);
    }

    #[test]
    fn seeds_are_deterministic() {
        let g = Graph::cocktail_party(16);
        assert_eq!(odd_anchor_subgraph(&g, 3).unwrap(), odd_anchor_subgraph(&g, 3).unwrap());
    }
}
