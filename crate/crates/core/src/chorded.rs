//! Short paths carrying many non-intersecting span-2/3 chords, and their
//! closure into short cycles.

use crate::bitset::VertexSet;
use crate::cycle::{ChordedPath, OrientedCycle, Path};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::independence_number;

/// A path of length at most `3k` with exactly `k` non-intersecting chords of
/// span 2 or 3, at least one of span 2. Requires `δ(g) > α(g)` and
/// `1 <= k <= α(g)/6`.
pub fn build_chorded_path(g: &Graph, k: usize) -> Result<ChordedPath> {
    let alpha = independence_number(g)?;
    if g.min_degree() <= alpha {
        return Err(Error::Precondition(format!(
            "minimum degree {} does not exceed independence number {alpha}",
            g.min_degree()
        )));
    }
    if k == 0 || 6 * k > alpha {
        return Err(Error::Precondition(format!(
            "k={k} must satisfy 1 <= k <= alpha/6 with alpha={alpha}"
        )));
    }
    grow_chorded_path(g, k)
}

/// The construction behind [`build_chorded_path`] without the hypothesis
/// checks; fails honestly when no extension step applies.
pub fn grow_chorded_path(g: &Graph, k: usize) -> Result<ChordedPath> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let [x, y, z] = g
        .find_triangle()
        .ok_or_else(|| Error::Stall("no triangle to start from".into()))?;
    let mut verts = vec![x, y, z];
    let mut chords = vec![(x, z)];
    while chords.len() < k {
        if let Some(ext) = extension_step(g, &verts) {
            apply(&mut verts, &mut chords, ext);
            continue;
        }
        verts.reverse();
        if let Some(ext) = extension_step(g, &verts) {
            apply(&mut verts, &mut chords, ext);
            continue;
        }
        verts.reverse();
        return Err(Error::Stall(format!(
            "no extension from either end of {verts:?} with chords {chords:?}"
        )));
    }
    let cp = ChordedPath::new(g, Path::from_vertices(verts), &chords)?;
    debug_assert!(cp.path.length() <= 3 * k);
    Ok(cp)
}

/// New vertices to append after the current end, and the new chord.
struct Extension {
    tail: Vec<usize>,
    chord: (usize, usize),
}

fn apply(verts: &mut Vec<usize>, chords: &mut Vec<(usize, usize)>, ext: Extension) {
    verts.extend_from_slice(&ext.tail);
    chords.push(ext.chord);
}

fn extension_step(g: &Graph, verts: &[usize]) -> Option<Extension> {
    let x = *verts.last().expect("non-empty");
    let mut avail = VertexSet::full(g.n());
    for &v in verts {
        avail.remove(v);
    }
    let ext = chord_gadget(g, x, &avail)?;
    Some(Extension {
        tail: ext.0,
        chord: ext.1,
    })
}

/// New vertices from `avail` to append after `x`, together with a span-2 or
/// span-3 chord they create: a triangle through `x`, a pendant triangle, or
/// a 4-cycle through `x`.
pub(crate) fn chord_gadget(g: &Graph, x: usize, avail: &VertexSet) -> Option<(Vec<usize>, (usize, usize))> {
    let nx = g.neighbors(x).intersection(avail);

    // x lies in a triangle xyz outside the path.
    for y in nx.iter() {
        let common = g.neighbors(y).intersection(&nx);
        if let Some(z) = common.iter().find(|&z| z > y) {
            return Some((vec![y, z], (x, z)));
        }
    }
    // A neighbour y of x lies in a triangle yzw avoiding x.
    for y in nx.iter() {
        let ny = g.neighbors(y).intersection(avail);
        for z in ny.iter() {
            let common = g.neighbors(z).intersection(&ny);
            if let Some(w) = common.iter().find(|&w| w > z) {
                return Some((vec![y, z, w], (y, w)));
            }
        }
    }
    // x and its neighbour y share no triangle: an edge between their other
    // neighbourhoods gives the span-3 chord xy.
    for y in nx.iter() {
        let mut n_x = nx.clone();
        n_x.remove(y);
        let mut n_y = g.neighbors(y).intersection(avail);
        n_y.remove(x);
        for z in n_x.iter() {
            let hits = g.neighbors(z).intersection(&n_y);
            if let Some(w) = hits.first() {
                return Some((vec![z, w, y], (x, y)));
            }
        }
    }
    None
}

/// Closes `cp.path` into a cycle using a shortest return path that avoids
/// every other path vertex. Fails if the cycle would exceed `len_budget`.
pub fn extend_to_short_cycle(g: &Graph, cp: &ChordedPath, len_budget: usize) -> Result<OrientedCycle> {
    close_path(g, &cp.path, len_budget)
}

/// Shortest cycle containing `p` as a subpath, if within `len_budget`.
pub fn close_path(g: &Graph, p: &Path, len_budget: usize) -> Result<OrientedCycle> {
    p.validate(g).map_err(Error::InvalidPath)?;
    if p.order() < 2 {
        return Err(Error::Precondition("path needs two ends".into()));
    }
    let (x, y) = (p.first(), p.last());
    let mut allowed = p.vertex_set(g.n()).complement();
    allowed.insert(x);
    allowed.insert(y);
    let back = if p.order() >= 3 && g.has_edge(x, y) {
        Some(vec![x, y])
    } else {
        // A return path needs at least one new vertex.
        let mut inner = allowed.clone();
        inner.remove(x);
        inner.remove(y);
        g.neighbors(x)
            .intersection(&inner)
            .iter()
            .filter_map(|a| {
                let mut rest = inner.clone();
                rest.insert(y);
                g.shortest_path_within(a, y, &rest).map(|mut q| {
                    q.insert(0, x);
                    q
                })
            })
            .min_by_key(Vec::len)
    }
    .ok_or_else(|| Error::NotFound(format!("no return path from {y} to {x}")))?;
    let len = p.order() + back.len() - 2;
    if len > len_budget {
        return Err(Error::NotFound(format!(
            "shortest closure has length {len} above the budget {len_budget}"
        )));
    }
    let mut seq = p.vertices().to_vec();
    seq.extend(back[1..back.len() - 1].iter().rev());
    let c = OrientedCycle::new(g, seq)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::contract_chords;

    #[test]
    fn k7_single_chord() {
        let g = Graph::complete(7);
        // alpha(K7) = 1, so the checked builder rejects k = 1.
        assert!(build_chorded_path(&g, 1).is_err());
        let cp = grow_chorded_path(&g, 1).unwrap();
        assert_eq!(cp.path.order(), 3);
        assert_eq!(cp.chords.len(), 1);
        assert_eq!(cp.chords[0].span, 2);
        let short = contract_chords(&cp, 1).unwrap();
        assert_eq!(short.vertices(), &[0, 2]);
    }

    #[test]
    fn grows_several_chords() {
        let g = Graph::complete(20);
        let cp = grow_chorded_path(&g, 5).unwrap();
        assert_eq!(cp.chords.len(), 5);
        assert!(cp.path.length() <= 15);
        assert!(cp.interiors_pairwise_disjoint());
        cp.validate(&g).unwrap();
    }

    #[test]
    fn span_three_case() {
        // Triangle 0-1-2 then a long even cycle hanging off 2: no further
        // triangles, so the only extensions use span-3 chords.
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        edges.extend([(2, 3), (2, 4), (3, 5), (4, 5)]);
        let g = Graph::from_edges(6, edges).unwrap();
        let cp = grow_chorded_path(&g, 2).unwrap();
        assert_eq!(cp.span_counts(), (1, 1));
    }

    #[test]
    fn closures() {
        let k6 = Graph::complete(6);
        let cp = grow_chorded_path(&k6, 1).unwrap();
        let c = extend_to_short_cycle(&k6, &cp, 6).unwrap();
        assert_eq!(c.len(), 3);

        let c6 = Graph::cycle(6);
        let p = Path::new(&c6, vec![0, 1, 2, 3]).unwrap();
        let c = close_path(&c6, &p, 6).unwrap();
        assert_eq!(c.len(), 6);
        assert!(close_path(&c6, &p, 5).is_err());
    }
}
