//! A short path with many span-2/3 chords together with a return path, so
//! that the two close into a cycle of length at most about `n/α`.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::chorded::{chord_gadget, grow_chorded_path};
use crate::connectivity::bfs_layers;
use crate::cycle::{ChordedPath, Path};
use crate::error::{Error, Result};
use crate::graph::{ConditionProfile, Graph};
use crate::pipelines::params::PipelineParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NOverAlphaBranch {
    /// A short return path exists directly.
    Shortcut,
    /// Built inside seven consecutive thin distance layers.
    Layered,
}

/// `p0` runs between the two ends; `p1` runs from the last vertex of `p0`
/// back to its first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NOverAlphaPaths {
    pub p0: ChordedPath,
    pub p1: Path,
    pub branch: NOverAlphaBranch,
    /// The chord target `t = ⌈δn/α⌉` the construction used.
    pub target: usize,
}

/// `⌈δn/α⌉`, at least 1.
pub fn chord_quota(n: usize, alpha: usize, delta: f64) -> usize {
    ((delta * n as f64 / alpha.max(1) as f64).ceil() as usize).max(1)
}

/// Checks `κ > α` and runs [`n_over_alpha_paths_with`].
pub fn n_over_alpha_paths(g: &Graph, params: &PipelineParams) -> Result<(ChordedPath, Path)> {
    let prof = ConditionProfile::compute_with_budget(g, params.alpha_budget)?;
    if !prof.kappa_exceeds_alpha() {
        return Err(Error::Precondition(format!(
            "connectivity {} does not exceed independence number {}",
            prof.kappa, prof.alpha
        )));
    }
    let out = n_over_alpha_paths_with(g, prof.alpha, params)?;
    Ok((out.p0, out.p1))
}

pub fn n_over_alpha_paths_with(g: &Graph, alpha: usize, params: &PipelineParams) -> Result<NOverAlphaPaths> {
    params.validate_fractions()?;
    let n = g.n();
    let t = chord_quota(n, alpha, params.delta);
    let q1 = grow_chorded_path(g, t)?;
    let (x, y) = (q1.path.first(), q1.path.last());
    let q2 = path_from(g, y, &q1.path.vertex_set(n).complement(), t, params.search_budget)
        .ok_or_else(|| Error::Stall(format!("no path of length {t} leaves the chorded path at {y}")))?;
    let z = *q2.last().expect("non-empty");
    let mut init = q1.path.vertices().to_vec();
    init.extend(&q2[1..]);
    let p_init = Path::new(g, init)?;

    let allowed = p_init.interior_set(n).complement();
    let limit = (1.0 - 4.0 * params.delta) * n as f64 / alpha.max(1) as f64;
    if let Some(q3) = g.shortest_path_within(z, x, &allowed) {
        if (q3.len() - 1) as f64 <= limit {
            let mut p1 = q2.clone();
            p1.extend(&q3[1..]);
            let out = NOverAlphaPaths {
                p1: Path::new(g, p1)?,
                p0: q1,
                branch: NOverAlphaBranch::Shortcut,
                target: t,
            };
            check_n_over_alpha(g, alpha, &out)?;
            return Ok(out);
        }
    }
    layered_paths(g, alpha, &p_init, t, params)
}

/// A path on exactly `len + 1` vertices starting at `s` inside `allowed ∪ {s}`.
fn path_from(g: &Graph, s: usize, allowed: &VertexSet, len: usize, budget: u64) -> Option<Vec<usize>> {
    fn go(
        g: &Graph,
        allowed: &VertexSet,
        len: usize,
        path: &mut Vec<usize>,
        on: &mut VertexSet,
        nodes: &mut u64,
        budget: u64,
    ) -> bool {
        if path.len() == len + 1 {
            return true;
        }
        *nodes += 1;
        if *nodes > budget {
            return false;
        }
        let last = *path.last().expect("non-empty");
        let mut next = g.neighbors(last).intersection(allowed);
        next.difference_with(on);
        for w in next.iter() {
            path.push(w);
            on.insert(w);
            if go(g, allowed, len, path, on, nodes, budget) {
                return true;
            }
            on.remove(w);
            path.pop();
        }
        false
    }
    let mut path = vec![s];
    let mut on = VertexSet::singleton(g.n(), s);
    let mut nodes = 0;
    go(g, allowed, len, &mut path, &mut on, &mut nodes, budget).then_some(path)
}

/// Desk-scale postconditions with `t` in place of `δn/α`: same ends,
/// disjoint interiors, `ℓ(p0) <= 7t`, `ℓ(p1) >= t`, `ℓ(p0) + ℓ(p1) <=
/// ⌊n/α⌋ + 4t`, at least `t` chords with one of span 2.
pub fn check_n_over_alpha(g: &Graph, alpha: usize, out: &NOverAlphaPaths) -> Result<()> {
    let n = g.n();
    let t = out.target;
    let (p0, p1) = (&out.p0.path, &out.p1);
    out.p0.validate(g)?;
    p1.validate(g).map_err(Error::InvalidPath)?;
    let fail = |m: String| Err(Error::Stall(format!("n-over-alpha postcondition: {m}")));
    if p1.first() != p0.last() || p1.last() != p0.first() {
        return fail("ends differ".into());
    }
    if p0.interior_set(n).intersects(&p1.vertex_set(n)) || p1.interior_set(n).intersects(&p0.vertex_set(n)) {
        return fail("interiors meet".into());
    }
    let (a, b) = out.p0.span_counts();
    if p0.length() > 7 * t || p1.length() < t || a + b < t || a == 0 {
        return fail(format!(
            "lengths ({}, {}), chords ({a}, {b}), target {t}",
            p0.length(),
            p1.length()
        ));
    }
    if p0.length() + p1.length() > n / alpha.max(1) + 4 * t {
        return fail(format!("total length {} too long", p0.length() + p1.length()));
    }
    Ok(())
}

/// Maximum matching between `left` and `right` by augmenting paths.
fn bipartite_matching(g: &Graph, left: &[usize], right: &VertexSet) -> Vec<(usize, usize)> {
    fn augment(g: &Graph, u: usize, right: &VertexSet, seen: &mut VertexSet, mate: &mut [usize]) -> bool {
        for w in g.neighbors(u).intersection(right).iter() {
            if seen.contains(w) {
                continue;
            }
            seen.insert(w);
            if mate[w] == usize::MAX || augment(g, mate[w], right, seen, mate) {
                mate[w] = u;
                return true;
            }
        }
        false
    }
    let n = g.n();
    let mut mate = vec![usize::MAX; n];
    for &u in left {
        let mut seen = VertexSet::new(n);
        augment(g, u, right, &mut seen, &mut mate);
    }
    right
        .iter()
        .filter(|&w| mate[w] != usize::MAX)
        .map(|w| (mate[w], w))
        .collect()
}

/// The layered construction from `p_init` (a chorded path continued by a
/// tail, first vertex `x`): seven consecutive thin BFS layers around `x` in
/// `g - interior(p_init)`, matchings between them, `2t + 1` chord-carrying
/// pieces inside the matched chains, and connectors back to `x`.
pub fn layered_paths(
    g: &Graph,
    alpha: usize,
    p_init: &Path,
    t: usize,
    params: &PipelineParams,
) -> Result<NOverAlphaPaths> {
    let n = g.n();
    let x = p_init.first();
    let inner = p_init.interior_set(n);
    let layers = bfs_layers(g, x, &inner)?;
    let sizes = layers.layer_sizes();
    let cap = (1.0 + params.eta) * alpha as f64;
    let start = (3..sizes.len().saturating_sub(6))
        .find(|&i| sizes[i..i + 7].iter().all(|&s| s as f64 <= cap))
        .ok_or_else(|| Error::Stall(format!("no seven consecutive layers of size <= {cap:.1}: {sizes:?}")))?;
    let u = &layers.layers[start..start + 7];

    // Chains through all seven layers along the matchings.
    let mut next = vec![usize::MAX; n];
    for j in 0..6 {
        for (a, b) in bipartite_matching(g, &u[j].to_vec(), &u[j + 1]) {
            next[a] = b;
        }
    }
    let mut chains: Vec<[usize; 7]> = Vec::new();
    for s in u[0].iter() {
        let mut ch = [s; 7];
        let mut ok = true;
        for j in 1..7 {
            let w = next[ch[j - 1]];
            if w == usize::MAX {
                ok = false;
                break;
            }
            ch[j] = w;
        }
        if ok {
            chains.push(ch);
        }
    }
    let mut chain_of = vec![usize::MAX; n];
    let mut level = vec![usize::MAX; n];
    for (c, ch) in chains.iter().enumerate() {
        for (j, &v) in ch.iter().enumerate() {
            chain_of[v] = c;
            level[v] = j;
        }
    }
    let w_all = VertexSet::from_iter(n, chains.iter().flatten().copied());
    let middle = VertexSet::from_iter(n, w_all.iter().filter(|&v| (1..=5).contains(&level[v])));
    let mut used = vec![false; chains.len()];
    let free = |used: &[bool]| VertexSet::from_iter(n, w_all.iter().filter(|&v| !used[chain_of[v]]));

    // First piece: a triangle through a level-3 vertex.
    let p_init_set = p_init.vertex_set(n);
    let mut pieces: Vec<(Vec<usize>, (usize, usize))> = Vec::new();
    let mut first = None;
    'outer: for c0 in w_all.iter().filter(|&v| level[v] == 3) {
        let pool = w_all.union(&p_init_set);
        let nb = g.neighbors(c0).intersection(&pool);
        for v in nb.iter() {
            for w in g.neighbors(v).intersection(&nb).iter() {
                if w == v || (p_init_set.contains(w) && !p_init_set.contains(v)) {
                    continue;
                }
                if p_init_set.contains(w) && p_init.position(w) < p_init.position(v) {
                    continue;
                }
                first = Some((vec![v, w, c0], (v, c0)));
                break 'outer;
            }
        }
    }
    let (piece0, chord0) = first.ok_or_else(|| Error::Stall("no triangle through the middle layer".into()))?;
    for &v in &piece0 {
        if chain_of[v] != usize::MAX {
            used[chain_of[v]] = true;
        }
    }
    pieces.push((piece0, chord0));

    while pieces.len() < 2 * t + 1 {
        let end = *pieces.last().expect("non-empty").0.last().expect("non-empty");
        let avail = free(&used);
        let mut made = None;
        for v in g.neighbors(end).intersection(&avail).iter() {
            let ch = chains[chain_of[v]];
            let lv = level[v];
            let run: Vec<usize> = if lv <= 3 {
                ch[lv..=3].to_vec()
            } else {
                ch[3..=lv].iter().rev().copied().collect()
            };
            let w = *run.last().expect("non-empty");
            let mut pool = avail.intersection(&middle);
            for &c in &ch {
                pool.remove(c);
            }
            if let Some((tail, chord)) = chord_gadget(g, w, &pool) {
                let mut piece = vec![end];
                piece.extend(&run);
                piece.extend(&tail);
                made = Some((piece, chord));
                break;
            }
        }
        let (piece, chord) = made.ok_or_else(|| {
            Error::Stall(format!(
                "piece {} could not be attached inside the layers",
                pieces.len()
            ))
        })?;
        for &v in &piece[1..] {
            used[chain_of[v]] = true;
        }
        pieces.push((piece, chord));
    }

    let mut full: Vec<usize> = pieces[0].0.clone();
    for (piece, _) in &pieces[1..] {
        full.extend(&piece[1..]);
    }
    let (u0, u1) = (full[0], *full.last().expect("non-empty"));
    let on_full = VertexSet::from_iter(n, full.iter().copied());
    let mut around = inner.union(&on_full).complement();
    around.insert(x);
    let q0: Vec<usize> = if w_all.contains(u0) {
        g.shortest_path_within(x, u0, &around)
            .ok_or_else(|| Error::Stall("no connector to the first piece".into()))?
    } else {
        let pos = p_init.position(u0).ok_or(Error::NotOnHost(u0))?;
        p_init.vertices()[..=pos].to_vec()
    };
    let q1 = g
        .shortest_path_within(x, u1, &around)
        .ok_or_else(|| Error::Stall("no connector to the last piece".into()))?;
    // Walk from u1 towards x until the first vertex on q0.
    let on_q0 = VertexSet::from_iter(n, q0.iter().copied());
    let back: Vec<usize> = q1.iter().rev().copied().collect();
    let meet = back.iter().position(|&v| on_q0.contains(v)).expect("x lies on both");
    let x_meet = back[meet];
    let q0_from = q0.iter().position(|&v| v == x_meet).expect("on q0");

    let split = pieces[..t].iter().map(|p| p.0.len() - 1).sum::<usize>();
    let p0_verts = full[..=split].to_vec();
    let mut p1_verts = full[split..].to_vec();
    p1_verts.extend(&back[1..=meet]);
    p1_verts.extend(&q0[q0_from + 1..]);
    let chords: Vec<(usize, usize)> = pieces[..t].iter().map(|p| p.1).collect();
    let out = NOverAlphaPaths {
        p0: ChordedPath::new(g, Path::new(g, p0_verts)?, &chords)?,
        p1: Path::new(g, p1_verts)?,
        branch: NOverAlphaBranch::Layered,
        target: t,
    };
    check_n_over_alpha(g, alpha, &out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Layers of `s`-cliques, consecutive layers completely joined.
    pub(crate) fn thick_path(layers: usize, s: usize) -> Graph {
        let n = layers * s;
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if b / s <= a / s + 1 {
                    edges.push((a, b));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn shortcut_on_dense_graph() {
        let g = Graph::complete(30);
        let out = n_over_alpha_paths_with(&g, 1, &PipelineParams::default()).unwrap();
        assert_eq!(out.branch, NOverAlphaBranch::Shortcut);
        check_n_over_alpha(&g, 1, &out).unwrap();
        let (p0, p1) = n_over_alpha_paths(&g, &PipelineParams::default()).unwrap();
        assert_eq!((p1.first(), p1.last()), (p0.path.last(), p0.path.first()));
    }

    #[test]
    fn rejects_hypothesis_failure() {
        let g = Graph::complete_bipartite(3, 3);
        assert!(matches!(
            n_over_alpha_paths(&g, &PipelineParams::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn layered_branch_on_thick_path() {
        let g = thick_path(18, 10);
        let params = PipelineParams {
            eta: 0.2,
            ..PipelineParams::default()
        };
        // A short start inside the first layer.
        let p_init = Path::new(&g, vec![0, 1, 2]).unwrap();
        let out = layered_paths(&g, 9, &p_init, 1, &params).unwrap();
        assert_eq!(out.branch, NOverAlphaBranch::Layered);
        check_n_over_alpha(&g, 9, &out).unwrap();
        // Each piece retires about three chains, so more pieces need more.
        let g = thick_path(18, 17);
        let params = PipelineParams {
            eta: 0.9,
            ..PipelineParams::default()
        };
        let out = layered_paths(&g, 9, &p_init, 2, &params).unwrap();
        check_n_over_alpha(&g, 9, &out).unwrap();
        assert_eq!(out.p0.chords.len(), 2);
    }

    #[test]
    fn layered_branch_reports_thick_layers() {
        let g = thick_path(12, 7);
        let p_init = Path::new(&g, vec![0, 1, 2]).unwrap();
        let err = layered_paths(&g, 6, &p_init, 1, &PipelineParams::default()).unwrap_err();
        assert!(matches!(err, Error::Stall(_)));
    }

    #[test]
    fn matching_is_maximum() {
        let g = Graph::complete_bipartite(3, 3);
        let right = g.vertex_set([3, 4, 5]);
        assert_eq!(bipartite_matching(&g, &[0, 1, 2], &right).len(), 3);
    }
}
