//! Same-ends path shortening within a bounded shortfall.
//!
//! Candidates are chord skips `p_i p_j` and detours between `p_i` and `p_j`
//! through vertices off the path; the smallest positive shortfall wins.

use crate::bitset::VertexSet;
use crate::cycle::Path;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Shortfall bound `⌈20n/δ(g)⌉` for [`shorten_path_mindeg`].
pub fn mindeg_window(n: usize, min_degree: usize) -> Result<usize> {
    if min_degree == 0 {
        return Err(Error::Precondition("minimum degree is zero".into()));
    }
    Ok((20 * n).div_ceil(min_degree))
}

/// Shortfall bound `⌈20α²/|P|⌉` for [`shorten_path_indep`].
pub fn indep_window(alpha: usize, order: usize) -> usize {
    (20 * alpha * alpha).div_ceil(order.max(1))
}

/// A same-ends path at most `⌈20n/δ(g)⌉` vertices shorter than `p`.
pub fn shorten_path_mindeg(g: &Graph, p: &Path) -> Result<Path> {
    let w = mindeg_window(g.n(), g.min_degree())?;
    shorten_path_within(g, p, &g.all_vertices(), w)
}

/// A same-ends path at most `⌈20α²/|P|⌉` vertices shorter than `p`; needs
/// `|P| > 4α`.
pub fn shorten_path_indep(g: &Graph, p: &Path, alpha: usize) -> Result<Path> {
    if p.order() <= 4 * alpha {
        return Err(Error::Precondition(format!(
            "path order {} does not exceed 4*alpha = {}",
            p.order(),
            4 * alpha
        )));
    }
    shorten_path_within(g, p, &g.all_vertices(), indep_window(alpha, p.order()))
}

/// Strictly shorter same-ends path inside `allowed`, losing at most
/// `max_shortfall` vertices; the smallest available shortfall is taken.
pub fn shorten_path_within(g: &Graph, p: &Path, allowed: &VertexSet, max_shortfall: usize) -> Result<Path> {
    p.validate(g).map_err(Error::InvalidPath)?;
    let vs = p.vertices();
    let n = g.n();
    let on_path = p.vertex_set(n);
    let outside = allowed.difference(&on_path);
    let pos: Vec<Option<usize>> = {
        let mut v = vec![None; n];
        for (i, &x) in vs.iter().enumerate() {
            v[x] = Some(i);
        }
        v
    };
    // (shortfall, i, j, replacement interior)
    let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
    let mut consider = |cand: (usize, usize, usize, Vec<usize>)| {
        if cand.0 >= 1 && cand.0 <= max_shortfall && best.as_ref().is_none_or(|b| cand.0 < b.0) {
            best = Some(cand);
        }
    };
    for (i, &a) in vs.iter().enumerate() {
        for b in g.neighbors(a).iter() {
            if let Some(j) = pos[b] {
                if j >= i + 2 {
                    consider((j - i - 1, i, j, Vec::new()));
                }
            }
        }
        // Detours a -> outside -> p_j.
        let mut within = outside.clone();
        within.insert(a);
        let dist = g.distances_within(a, &within);
        let parent_of = |target: usize| -> Option<Vec<usize>> {
            let last = g
                .neighbors(target)
                .intersection(&outside)
                .iter()
                .filter(|&w| dist[w] != usize::MAX)
                .min_by_key(|&w| dist[w])?;
            g.shortest_path_within(a, last, &within).map(|path| path[1..].to_vec())
        };
        for (j, &b) in vs.iter().enumerate().skip(i + 2) {
            let near = g
                .neighbors(b)
                .intersection(&outside)
                .iter()
                .filter_map(|w| (dist[w] != usize::MAX).then_some(dist[w]))
                .min();
            let Some(dw) = near else { continue };
            // Replacement interior has dw vertices; the old one had j - i - 1.
            if dw < j - i - 1 {
                if let Some(inner) = parent_of(b) {
                    consider((j - i - 1 - inner.len(), i, j, inner));
                }
            }
        }
    }
    let (_, i, j, inner) = best.ok_or_else(|| {
        Error::Stall(format!(
            "no same-ends shortening of a {}-vertex path within shortfall {max_shortfall}",
            p.order()
        ))
    })?;
    let mut out = vs[..=i].to_vec();
    out.extend(inner);
    out.extend(&vs[j..]);
    let q = Path::new(g, out)?;
    debug_assert!(q.order() < p.order() && q.first() == p.first() && q.last() == p.last());
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_loses_one() {
        let g = Graph::complete(20);
        let p = Path::new(&g, (0..20).collect()).unwrap();
        let q = shorten_path_mindeg(&g, &p).unwrap();
        assert_eq!(q.order(), 19);
        assert_eq!((q.first(), q.last()), (0, 19));
        let q = shorten_path_indep(&g, &p, 1).unwrap();
        assert_eq!(q.order(), 19);
    }

    #[test]
    fn no_shortcut_in_a_path_graph() {
        let g = Graph::path(9);
        let p = Path::new(&g, (0..9).collect()).unwrap();
        assert!(matches!(shorten_path_mindeg(&g, &p), Err(Error::Stall(_))));
        assert!(matches!(shorten_path_indep(&g, &p, 2), Err(Error::Stall(_))));
        assert!(matches!(shorten_path_indep(&g, &p, 5), Err(Error::Precondition(_))));
    }

    #[test]
    fn detour_through_outside() {
        // 0-1-2-3-4-5 with an outside bypass 1-6-4.
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6), (6, 4)]).unwrap();
        let p = Path::new(&g, (0..6).collect()).unwrap();
        let q = shorten_path_within(&g, &p, &g.all_vertices(), 5).unwrap();
        assert_eq!(q.vertices(), &[0, 1, 6, 4, 5]);
    }
}
