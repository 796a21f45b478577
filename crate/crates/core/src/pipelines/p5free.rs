//! Components without a path on five vertices: their structure, and
//! extending a cycle into one while leaving a forest behind.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rotation::{extend_avoiding, extend_into_component};

/// A path on `k` vertices inside `set`, found by exhaustive search.
pub fn path_on_within(g: &Graph, set: &VertexSet, k: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, set: &VertexSet, k: usize, path: &mut Vec<usize>, on: &mut VertexSet) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().expect("non-empty");
        let mut next = g.neighbors(last).intersection(set);
        next.difference_with(on);
        for w in next.iter() {
            path.push(w);
            on.insert(w);
            if go(g, set, k, path, on) {
                return true;
            }
            on.remove(w);
            path.pop();
        }
        false
    }
    if k == 0 || set.len() < k {
        return None;
    }
    for s in set.iter() {
        let mut path = vec![s];
        let mut on = VertexSet::singleton(g.n(), s);
        if go(g, set, k, &mut path, &mut on) {
            return Some(path);
        }
    }
    None
}

/// A path on five vertices inside `set`, if any.
pub fn find_p5_within(g: &Graph, set: &VertexSet) -> Option<Vec<usize>> {
    path_on_within(g, set, 5)
}

/// Components of `g[outside]` that contain a path on five vertices.
pub fn p5_components(g: &Graph, outside: &VertexSet) -> Vec<VertexSet> {
    g.components_within(outside)
        .into_iter()
        .filter(|h| find_p5_within(g, h).is_some())
        .collect()
}

/// The three shapes of a connected graph without a path on five vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum P5Structure {
    K4 {
        vertices: [usize; 4],
    },
    Tree,
    /// Deleting `apex` leaves a forest.
    Apex {
        apex: usize,
    },
}

/// Structure of the connected, P5-free graph `h`.
pub fn p5free_structure(h: &Graph) -> Result<P5Structure> {
    p5free_structure_within(h, &h.all_vertices())
}

/// Structure of `g[set]`, which must be connected and P5-free.
pub fn p5free_structure_within(g: &Graph, set: &VertexSet) -> Result<P5Structure> {
    if set.is_empty() {
        return Err(Error::InvalidGraph("empty component".into()));
    }
    let first = set.first().expect("non-empty");
    if &g.reach_within(first, set) != set {
        return Err(Error::InvalidGraph("component is not connected".into()));
    }
    if let Some(p) = find_p5_within(g, set) {
        return Err(Error::InvalidGraph(format!("component contains the path {p:?}")));
    }
    if set.len() == 4 && set.iter().all(|v| g.neighbors(v).intersection_len(set) == 3) {
        let vs = set.to_vec();
        return Ok(P5Structure::K4 {
            vertices: [vs[0], vs[1], vs[2], vs[3]],
        });
    }
    if g.is_forest_within(set) {
        return Ok(P5Structure::Tree);
    }
    for apex in set.iter() {
        let mut rest = set.clone();
        rest.remove(apex);
        if g.is_forest_within(&rest) {
            return Ok(P5Structure::Apex { apex });
        }
    }
    Err(Error::InvalidGraph(
        "P5-free component without a tree, K4 or apex shape".into(),
    ))
}

/// Checks the forest-remainder postconditions of [`extend_keeping_forest`].
fn check_forest_step(g: &Graph, before: &OrientedCycle, after: &OrientedCycle, h: &VertexSet) -> Result<()> {
    let n = g.n();
    let grown = after.len() >= before.len() && after.len() <= before.len() + 4;
    let kept = before.vertex_set(n).is_subset(&after.vertex_set(n));
    let lost = before.edges_missing_from(after);
    let rest = h.difference(&after.vertex_set(n));
    if !(grown && kept && lost <= 4 && !rest.is_empty() && g.is_forest_within(&rest)) {
        return Err(Error::Stall(format!(
            "forest-keeping extension broke its contract: {} -> {}, kept={kept}, lost={lost}, rest={:?}",
            before.len(),
            after.len(),
            rest.to_vec()
        )));
    }
    Ok(())
}

/// Extends `cycle` by at most four vertices of the P5-free component `h`
/// of `g - V(cycle)` so that what remains of `h` is a non-empty forest.
/// Relies on `κ(g) > α(g)` for the underlying extensions.
pub fn extend_keeping_forest(g: &Graph, cycle: &OrientedCycle, h: &VertexSet) -> Result<OrientedCycle> {
    let out = match p5free_structure_within(g, h)? {
        P5Structure::Tree => cycle.clone(),
        P5Structure::Apex { apex } => {
            let v = h
                .iter()
                .find(|&v| v != apex)
                .ok_or_else(|| Error::Precondition("apex component has a single vertex".into()))?;
            extend_into_component(g, cycle, h, apex, v)?
        }
        P5Structure::K4 { vertices } => {
            let mid = extend_into_component(g, cycle, h, vertices[0], vertices[1])?;
            let rest = h.difference(&mid.vertex_set(g.n()));
            if rest.len() <= 2 {
                mid
            } else {
                let u = rest.first().expect("non-empty");
                let v = rest.iter().nth(1).expect("three vertices");
                extend_into_component(g, &mid, &rest, u, v)?
            }
        }
    };
    check_forest_step(g, cycle, &out, h)?;
    Ok(out)
}

/// Extends `cycle` by exactly the vertex `u`, which has at most one neighbour
/// in its component `h` of `g - V(cycle)`.
pub fn absorb_leaf(g: &Graph, cycle: &OrientedCycle, h: &VertexSet, u: usize) -> Result<OrientedCycle> {
    let nb = g.neighbors(u).intersection(h);
    if nb.len() > 1 {
        return Err(Error::Precondition(format!(
            "{u} has {} neighbours in its component",
            nb.len()
        )));
    }
    let out = extend_avoiding(g, cycle, h, u, nb.first())?;
    if out.len() != cycle.len() + 1 || !out.contains(u) {
        return Err(Error::Stall(format!("leaf {u} was not absorbed alone")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structures() {
        assert!(matches!(
            p5free_structure(&Graph::complete(4)).unwrap(),
            P5Structure::K4 { .. }
        ));
        assert_eq!(p5free_structure(&Graph::star(5)).unwrap(), P5Structure::Tree);
        // Triangle 0-1-2 with pendants 3, 4 on corner 0.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(p5free_structure(&g).unwrap(), P5Structure::Apex { apex: 0 });
        let mut rest = g.all_vertices();
        rest.remove(0);
        assert!(g.is_forest_within(&rest));
        assert!(p5free_structure(&Graph::path(5)).is_err());
        assert!(p5free_structure(&Graph::empty(2)).is_err());
    }

    #[test]
    fn p5_detection() {
        let g = Graph::path(4);
        assert!(find_p5_within(&g, &g.all_vertices()).is_none());
        let g = Graph::cycle(5);
        assert_eq!(find_p5_within(&g, &g.all_vertices()).unwrap().len(), 5);
    }

    /// A cycle 0..c joined completely to an outside block.
    fn host(c: usize, block: &[(usize, usize)], extra: usize) -> Graph {
        let n = c + extra;
        let mut edges: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
        for i in 0..c {
            for j in i + 2..c {
                if !(i == 0 && j == c - 1) {
                    edges.push((i, j));
                }
            }
            for x in c..n {
                edges.push((i, x));
            }
        }
        edges.extend(block.iter().map(|&(a, b)| (a + c, b + c)));
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn extension_keeps_forest() {
        let g = host(8, &[(0, 1)], 2);
        let cyc = OrientedCycle::new(&g, (0..8).collect()).unwrap();
        let h = g.vertex_set([8, 9]);
        assert_eq!(extend_keeping_forest(&g, &cyc, &h).unwrap(), cyc);

        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = host(8, &k4, 4);
        let cyc = OrientedCycle::new(&g, (0..8).collect()).unwrap();
        let h = g.vertex_set(8..12);
        let out = extend_keeping_forest(&g, &cyc, &h).unwrap();
        let rest = h.difference(&out.vertex_set(12));
        assert!((1..=2).contains(&rest.len()));
    }

    #[test]
    fn leaf_absorption() {
        let g = host(6, &[(0, 1), (1, 2)], 3);
        let cyc = OrientedCycle::new(&g, (0..6).collect()).unwrap();
        let h = g.vertex_set(6..9);
        let out = absorb_leaf(&g, &cyc, &h, 6).unwrap();
        assert_eq!(out.len(), 7);
        assert!(absorb_leaf(&g, &cyc, &h, 7).is_err());
    }
}
