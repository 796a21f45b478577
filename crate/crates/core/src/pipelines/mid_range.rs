//! Lengthening a path by a positive amount of at most `r`, through a short
//! cycle outside it and a fan of disjoint paths back to it.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::connectivity::disjoint_paths;
use crate::cycle::{OrientedCycle, Path};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{find_cycle_within, SearchOutcome};

/// Which of the two constructions produced the longer path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MidRangeBranch {
    /// Two fan paths joined through an arc of the outside cycle.
    ShortPaths,
    /// Two fan paths joined by an edge between their far stretches.
    LongPaths,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MidRangeExtension {
    pub path: Path,
    pub branch: MidRangeBranch,
    /// Length of the outside cycle used.
    pub cycle_len: usize,
    /// Whether `r` also satisfied the asymptotic window.
    pub strict_window: bool,
}

/// Smallest `r` accepted by [`mid_range_extend`].
pub const MIN_STEP: usize = 6;

/// The asymptotic window `max{4√ℓ, 32√α} < r <= min{2ℓ, n/α, α}`.
pub fn strict_mid_range_window(ell: usize, r: usize, n: usize, alpha: usize) -> bool {
    let lo = (4.0 * (ell as f64).sqrt()).max(32.0 * (alpha as f64).sqrt());
    let hi = (2.0 * ell as f64).min(n as f64 / alpha.max(1) as f64).min(alpha as f64);
    (r as f64) > lo && (r as f64) <= hi
}

/// A path with the ends of `p` and length in `(ℓ(p), ℓ(p) + r]`. Accepts the
/// desk window `MIN_STEP <= r <= 2ℓ(p)` with `ℓ(p) <= n/2`; `alpha` is only
/// used to report whether the asymptotic window held.
pub fn mid_range_extend(g: &Graph, p: &Path, r: usize, alpha: usize) -> Result<Path> {
    mid_range_extend_traced(g, p, r, alpha, crate::search::DEFAULT_SEARCH_BUDGET).map(|e| e.path)
}

pub fn mid_range_extend_traced(g: &Graph, p: &Path, r: usize, alpha: usize, budget: u64) -> Result<MidRangeExtension> {
    p.validate(g).map_err(Error::InvalidPath)?;
    let ell = p.length();
    if r < MIN_STEP || r > 2 * ell || 2 * ell > g.n() {
        return Err(Error::Precondition(format!(
            "need {MIN_STEP} <= r <= 2*len(p) and len(p) <= n/2, got r={r}, len(p)={ell}, n={}",
            g.n()
        )));
    }
    let n = g.n();
    let on_p = p.vertex_set(n);
    let outside = on_p.complement();
    let mut last = Error::NotFound("no cycle outside the path".into());
    for m in (3..=r / 2).rev() {
        let c = match find_cycle_within(g, m, &outside, budget) {
            SearchOutcome::Found(c) => c,
            SearchOutcome::Absent => continue,
            SearchOutcome::Unknown => {
                last = Error::BudgetExceeded {
                    what: "outside cycle search",
                    budget,
                };
                continue;
            }
        };
        match extend_through(g, p, &c, r) {
            Ok(mut ext) => {
                ext.strict_window = strict_mid_range_window(ell, r, n, alpha);
                return Ok(ext);
            }
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Removes shortcuts so that the path is induced.
fn make_induced(g: &Graph, mut vs: Vec<usize>) -> Vec<usize> {
    let mut i = 0;
    while i < vs.len() {
        if let Some(j) = (i + 2..vs.len()).rev().find(|&j| g.has_edge(vs[i], vs[j])) {
            vs.drain(i + 1..j);
        }
        i += 1;
    }
    vs
}

/// A fan path from the cycle vertex `v` to the path vertex at `pos`.
struct Spoke {
    /// From the cycle vertex to the path vertex.
    verts: Vec<usize>,
    pos: usize,
}

impl Spoke {
    fn length(&self) -> usize {
        self.verts.len() - 1
    }
}

fn extend_through(g: &Graph, p: &Path, c: &OrientedCycle, r: usize) -> Result<MidRangeExtension> {
    let n = g.n();
    let ell = p.length();
    let cset = c.vertex_set(n);
    let pv = p.vertices();
    // The fan into all of P first, then fans into short stretches of P so
    // that two spokes land close together.
    let width = c.len().min(ell);
    let mut targets = vec![p.vertex_set(n)];
    targets.extend((0..=ell + 1 - width).map(|s| VertexSet::from_iter(n, pv[s..s + width].iter().copied())));
    let mut best_fan = 0;
    for target in targets {
        let sys = disjoint_paths(g, &cset, &target, c.len(), &VertexSet::new(n))?;
        best_fan = best_fan.max(sys.paths.len());
        if sys.paths.len() < 2 {
            continue;
        }
        let mut spokes: Vec<Spoke> = sys
            .paths
            .iter()
            .map(|q| {
                let verts = make_induced(g, q.vertices().to_vec());
                let pos = p.position(*verts.last().expect("non-empty")).expect("ends on p");
                Spoke { verts, pos }
            })
            .collect();
        spokes.sort_by_key(|s| s.pos);
        if let Some((path, branch)) = join_spokes(g, p, c, r, &spokes)? {
            return Ok(MidRangeExtension {
                path,
                branch,
                cycle_len: c.len(),
                strict_window: false,
            });
        }
    }
    Err(Error::Stall(format!(
        "no join of up to {best_fan} fan paths from a {}-cycle fits the window ({ell}, {}]",
        c.len(),
        ell + r
    )))
}

fn join_spokes(
    g: &Graph,
    p: &Path,
    c: &OrientedCycle,
    r: usize,
    spokes: &[Spoke],
) -> Result<Option<(Path, MidRangeBranch)>> {
    let ell = p.length();
    let quarter = (r / 4).max(1);
    let short_count = spokes.iter().filter(|s| s.length() <= quarter).count();
    let prefer_short = 4 * short_count >= c.len();
    let order = if prefer_short {
        [MidRangeBranch::ShortPaths, MidRangeBranch::LongPaths]
    } else {
        [MidRangeBranch::LongPaths, MidRangeBranch::ShortPaths]
    };
    let pv = p.vertices();
    let fits = |len: usize| len > ell && len <= ell + r;
    for branch in order {
        for a in 0..spokes.len() {
            for b in a + 1..spokes.len() {
                let (si, sj) = (&spokes[a], &spokes[b]);
                let cand = match branch {
                    MidRangeBranch::ShortPaths => arc_join(c, pv, si, sj, &fits),
                    MidRangeBranch::LongPaths => edge_join(g, pv, si, sj, r, &fits),
                };
                if let Some(vs) = cand {
                    let path = Path::new(g, vs)?;
                    debug_assert!(fits(path.length()));
                    return Ok(Some((path, branch)));
                }
            }
        }
    }
    Ok(None)
}

/// `P[..u_i] Q_i C[v_i..v_j] Q_j P[u_j..]`, longer arc first.
fn arc_join(
    c: &OrientedCycle,
    pv: &[usize],
    si: &Spoke,
    sj: &Spoke,
    fits: &impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let (vi, vj) = (si.verts[0], sj.verts[0]);
    let fwd = c.forward_steps(vi, vj).ok()?;
    let mut arcs = [
        (fwd, crate::cycle::Direction::Forward),
        (c.len() - fwd, crate::cycle::Direction::Backward),
    ];
    arcs.sort_by_key(|a| std::cmp::Reverse(a.0));
    let ell = pv.len() - 1;
    for (arc_len, dir) in arcs {
        let len = si.pos + si.length() + arc_len + sj.length() + (ell - sj.pos);
        if !fits(len) {
            continue;
        }
        let arc = c.segment(vi, vj, dir).ok()?;
        let mut vs: Vec<usize> = pv[..=si.pos].to_vec();
        vs.extend(si.verts.iter().rev().skip(1));
        vs.extend(&arc.vertices()[1..]);
        vs.extend(sj.verts.iter().skip(1));
        vs.extend(&pv[sj.pos + 1..]);
        return Some(vs);
    }
    None
}

/// `P[..u_i] Q_i[u_i..x] x y Q_j[y..u_j] P[u_j..]` for an edge `xy` between
/// the two spokes, preferring even distances in `[r/8, r/4]` from the path.
fn edge_join(
    g: &Graph,
    pv: &[usize],
    si: &Spoke,
    sj: &Spoke,
    r: usize,
    fits: &impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let ell = pv.len() - 1;
    // Distance from the path end of the spoke, and the vertex.
    let from_path =
        |s: &Spoke| -> Vec<(usize, usize)> { s.verts.iter().rev().enumerate().skip(1).map(|(d, &v)| (d, v)).collect() };
    let (di, dj) = (from_path(si), from_path(sj));
    let band = |d: usize| d % 2 == 0 && 8 * d >= r && 4 * d <= r;
    let mut pairs: Vec<(bool, usize, usize, usize, usize)> = Vec::new();
    for &(dx, x) in &di {
        for &(dy, y) in &dj {
            if g.has_edge(x, y) {
                pairs.push((!(band(dx) && band(dy)), dx + dy, dx, dy, 0));
                let last = pairs.last_mut().expect("pushed");
                last.4 = x * g.n() + y;
            }
        }
    }
    pairs.sort();
    for (_, _, dx, dy, code) in pairs {
        let len = si.pos + dx + 1 + dy + (ell - sj.pos);
        if !fits(len) {
            continue;
        }
        let (x, y) = (code / g.n(), code % g.n());
        let mut vs: Vec<usize> = pv[..=si.pos].to_vec();
        let ri: Vec<usize> = si.verts.iter().rev().copied().collect();
        let xi = ri.iter().position(|&w| w == x)?;
        vs.extend(&ri[1..=xi]);
        let yj = sj.verts.iter().position(|&w| w == y)?;
        vs.extend(&sj.verts[yj..sj.verts.len() - 1]);
        vs.extend(&pv[sj.pos..]);
        return Some(vs);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_window() {
        let g = Graph::complete(100);
        let p = Path::new(&g, (0..21).collect()).unwrap();
        let out = mid_range_extend(&g, &p, 20, 1).unwrap();
        assert_eq!((out.first(), out.last()), (0, 20));
        assert!(out.length() > 20 && out.length() <= 40);
        assert!(!strict_mid_range_window(20, 20, 100, 1));
    }

    #[test]
    fn window_errors() {
        let g = Graph::complete(100);
        let p = Path::new(&g, (0..11).collect()).unwrap();
        assert!(matches!(mid_range_extend(&g, &p, 4, 1), Err(Error::Precondition(_))));
        assert!(matches!(mid_range_extend(&g, &p, 21, 1), Err(Error::Precondition(_))));
    }

    /// A path 0..=L, and far away a triangle reached from each path vertex
    /// through its own induced spoke of length `s`; consecutive spokes are
    /// joined at their far ends only, so no arc join fits.
    fn spoked(ell: usize, s: usize) -> (Graph, Path) {
        let mut edges: Vec<(usize, usize)> = (0..ell).map(|i| (i, i + 1)).collect();
        let mut next = ell + 1;
        let mut tips = Vec::new();
        for i in [2usize, 4] {
            let mut prev = i;
            let mut spoke = Vec::new();
            for _ in 0..s {
                edges.push((prev, next));
                spoke.push(next);
                prev = next;
                next += 1;
            }
            tips.push(spoke);
        }
        // The two spokes meet by an edge at even distance 4 from the path.
        edges.push((tips[0][3], tips[1][3]));
        // Far ends close a triangle with one extra vertex.
        let (a, b) = (*tips[0].last().unwrap(), *tips[1].last().unwrap());
        edges.extend([(a, b), (a, next), (b, next)]);
        let g = Graph::from_edges(next + 1, edges).unwrap();
        let p = Path::new(&g, (0..=ell).collect()).unwrap();
        (g, p)
    }

    #[test]
    fn long_paths_branch() {
        let (g, p) = spoked(20, 12);
        let ext = mid_range_extend_traced(&g, &p, 16, 2, 1_000_000).unwrap();
        assert_eq!(ext.branch, MidRangeBranch::LongPaths);
        assert!(ext.path.length() > 20 && ext.path.length() <= 36);
    }

    #[test]
    fn induced_shortcut() {
        let g = Graph::complete(5);
        assert_eq!(make_induced(&g, vec![0, 1, 2, 3]), vec![0, 3]);
    }
}
