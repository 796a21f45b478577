//! Growing a cycle until either its complement has no path on five vertices
//! or it reaches the target length, without jumping too far past it and
//! while keeping a marked subpath or many span-2 chords.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::cycle::{validate_cycle, OrientedCycle, Path};
use crate::error::{Error, Result};
use crate::graph::{ConditionProfile, Graph};
use crate::pipelines::cycle_chords::strict_chords;
use crate::pipelines::p5free::{find_p5_within, p5_components};
use crate::pipelines::params::PipelineParams;
use crate::rotation::{extend_avoiding, rotate_c2, rotate_c3, rotate_c4, rotate_c5, RotationConfig};

/// Node budget for one long-bridge search.
const BRIDGE_BUDGET: u64 = 20_000;
/// Attachment choices tried per cycle vertex.
const ATTACH_CHOICES: usize = 3;

/// The rewiring that produced one accepted growth step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LongMove {
    C1,
    C2,
    C3,
    C4,
    C5,
    Extension,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LongReport {
    pub cycle: OrientedCycle,
    pub moves: Vec<LongMove>,
}

/// `⌊n / (δα)⌋`, the allowed overshoot past the target length.
pub fn jump_bound(n: usize, alpha: usize, delta: f64) -> usize {
    (n as f64 / (delta * alpha.max(1) as f64)).floor() as usize
}

/// Span-2 chords needed when the marked subpath is lost: `⌈δα⌉`.
pub fn chord_target(alpha: usize, delta: f64) -> usize {
    (delta * alpha as f64).ceil() as usize
}

/// Checks the three output properties literally.
pub fn check_long_properties(
    g: &Graph,
    c: &OrientedCycle,
    p0: &Path,
    ell: usize,
    alpha: usize,
    delta: f64,
) -> Result<()> {
    validate_cycle(g, c).map_err(Error::InvalidCycle)?;
    let cap = ell + jump_bound(g.n(), alpha, delta);
    if c.len() > cap {
        return Err(Error::Stall(format!("cycle length {} exceeds {cap}", c.len())));
    }
    if c.len() < ell {
        if let Some(p) = find_p5_within(g, &c.vertex_set(g.n()).complement()) {
            return Err(Error::Stall(format!("short cycle leaves the path {p:?} outside")));
        }
    }
    if !c.contains_path(p0) && strict_chords(g, c, &[2]).len() < chord_target(alpha, delta) {
        return Err(Error::Stall(
            "cycle lost the marked path and lacks span-2 chords".into(),
        ));
    }
    Ok(())
}

/// A cycle satisfying the length bound, the P5 property and the chord
/// property. Checks `|c0| <= ell`, `p0 ⊆ c0`, `ℓ(p0) <= δα` and `κ > α`.
pub fn lemma_long(
    g: &Graph,
    c0: &OrientedCycle,
    p0: &Path,
    ell: usize,
    params: &PipelineParams,
) -> Result<OrientedCycle> {
    params.validate()?;
    let prof = ConditionProfile::compute_with_budget(g, params.alpha_budget)?;
    if !prof.kappa_exceeds_alpha() {
        return Err(Error::Precondition(format!(
            "connectivity {} does not exceed independence number {}",
            prof.kappa, prof.alpha
        )));
    }
    let p0_len = p0.length() as f64;
    if p0_len > params.delta * prof.alpha as f64 {
        return Err(Error::Precondition(format!(
            "marked path has length {} above delta*alpha = {}",
            p0.length(),
            params.delta * prof.alpha as f64
        )));
    }
    lemma_long_with(g, c0, p0, ell, prof.alpha, params).map(|r| r.cycle)
}

/// The improvement loop with a known `alpha` and no bound on `ℓ(p0)`.
pub fn lemma_long_with(
    g: &Graph,
    c0: &OrientedCycle,
    p0: &Path,
    ell: usize,
    alpha: usize,
    params: &PipelineParams,
) -> Result<LongReport> {
    validate_cycle(g, c0).map_err(Error::InvalidCycle)?;
    p0.validate(g).map_err(Error::InvalidPath)?;
    if c0.len() > ell {
        return Err(Error::Precondition(format!("|c0| = {} exceeds ell = {ell}", c0.len())));
    }
    if !c0.contains_path(p0) {
        return Err(Error::Precondition("c0 does not contain the marked path".into()));
    }
    let n = g.n();
    let search = MoveSearch {
        g,
        p0,
        cap: ell + jump_bound(n, alpha, params.delta),
        need: chord_target(alpha, params.delta),
    };
    let mut c = c0.clone();
    let mut moves = Vec::new();
    while c.len() < ell {
        let outside = c.vertex_set(n).complement();
        let Some(h) = p5_components(g, &outside).into_iter().next() else {
            break;
        };
        if moves.len() >= params.step_budget {
            return Err(Error::BudgetExceeded {
                what: "long-cycle improvement",
                budget: params.step_budget as u64,
            });
        }
        match search.best(&c, &h) {
            Some((next, kind)) => {
                c = next;
                moves.push(kind);
            }
            None => {
                return Err(Error::Stall(format!(
                    "no growth move: |C|={}, ell={ell}, cap={}, |H|={}, marked path kept={}, span-2 chords={}, moves so far={}",
                    c.len(),
                    search.cap,
                    h.len(),
                    c.contains_path(p0),
                    strict_chords(g, &c, &[2]).len(),
                    moves.len()
                )))
            }
        }
    }
    check_long_properties(g, &c, p0, ell, alpha, params.delta)?;
    Ok(LongReport { cycle: c, moves })
}

struct MoveSearch<'a> {
    g: &'a Graph,
    p0: &'a Path,
    cap: usize,
    need: usize,
}

/// Outcome of offering one candidate.
enum Verdict {
    Keep,
    Chords,
    Reject,
}

impl MoveSearch<'_> {
    fn judge(&self, c: &OrientedCycle, cand: &Result<OrientedCycle>) -> Verdict {
        let Ok(next) = cand else { return Verdict::Reject };
        if next.len() <= c.len() || next.len() > self.cap {
            return Verdict::Reject;
        }
        if next.contains_path(self.p0) {
            return Verdict::Keep;
        }
        if strict_chords(self.g, next, &[2]).len() >= self.need {
            Verdict::Chords
        } else {
            Verdict::Reject
        }
    }

    /// First growth move keeping the marked path; otherwise the first one
    /// with enough span-2 chords.
    fn best(&self, c: &OrientedCycle, h: &VertexSet) -> Option<(OrientedCycle, LongMove)> {
        let keeping = c.contains_path(self.p0);
        let mut fallback: Option<(OrientedCycle, LongMove)> = None;
        let mut offer = |cand: Result<OrientedCycle>, kind: LongMove| -> Option<(OrientedCycle, LongMove)> {
            match self.judge(c, &cand) {
                Verdict::Keep => cand.ok().map(|x| (x, kind)),
                Verdict::Chords if !keeping => cand.ok().map(|x| (x, kind)),
                Verdict::Chords => {
                    if fallback.is_none() {
                        fallback = cand.ok().map(|x| (x, kind));
                    }
                    None
                }
                Verdict::Reject => None,
            }
        };
        let g = self.g;
        let attach: Vec<(usize, Vec<usize>)> = c
            .vertices()
            .iter()
            .map(|&w| (w, g.neighbors(w).intersection(h).iter().take(ATTACH_CHOICES).collect()))
            .filter(|(_, nb): &(usize, Vec<usize>)| !nb.is_empty())
            .collect();
        for (u, nu) in &attach {
            for (v, nv) in &attach {
                if u == v {
                    continue;
                }
                let (u, v) = (*u, *v);
                for &x in nv {
                    for &y in nu {
                        if let Some(found) = self.pair_moves(c, h, u, v, x, y, &mut offer) {
                            return Some(found);
                        }
                    }
                }
            }
        }
        for w in h.iter() {
            if let Some(found) = offer(extend_avoiding(g, c, h, w, None), LongMove::Extension) {
                return Some(found);
            }
        }
        fallback
    }

    #[allow(clippy::too_many_arguments)]
    fn pair_moves(
        &self,
        c: &OrientedCycle,
        h: &VertexSet,
        u: usize,
        v: usize,
        x: usize,
        y: usize,
        offer: &mut impl FnMut(Result<OrientedCycle>, LongMove) -> Option<(OrientedCycle, LongMove)>,
    ) -> Option<(OrientedCycle, LongMove)> {
        let g = self.g;
        let short = Path::from_vertices(g.shortest_path_within(x, y, h)?);
        let pred = |w: usize, i: usize| c.predecessor(w, i).ok();
        let fwd = c.forward_steps(u, v).ok()?;

        // Replace the forward u..v arc: needs order above the arc interior.
        if fwd <= 5 {
            let bridge = if short.order() >= fwd {
                Some(short.clone())
            } else {
                long_bridge(g, h, x, y, fwd, BRIDGE_BUDGET)
            };
            if let Some(b) = bridge {
                if let Some(f) = offer(rotate_c3(g, c, u, v, &b), LongMove::C3) {
                    return Some(f);
                }
            }
        }
        if pred(u, 1)
            .zip(pred(v, 1))
            .is_some_and(|(a, b)| a == v || g.has_edge(a, b))
        {
            let kind = if x == y { LongMove::C1 } else { LongMove::C2 };
            let cfg = RotationConfig::new(c.clone(), u, v, short.clone());
            if let Some(f) = offer(rotate_c2(g, &cfg), kind) {
                return Some(f);
            }
        }
        if c.distance(u, v).ok()? < 4 {
            return None;
        }
        if pred(u, 1).zip(pred(v, 3)).is_some_and(|(a, b)| g.has_edge(a, b)) {
            if let Some(b) = self.bridge_of_order(h, &short, x, y, 3) {
                let cfg = RotationConfig::new(c.clone(), u, v, b);
                if let Some(f) = offer(rotate_c4(g, &cfg), LongMove::C4) {
                    return Some(f);
                }
            }
        }
        if pred(u, 3).zip(pred(v, 3)).is_some_and(|(a, b)| g.has_edge(a, b)) {
            if let Some(b) = self.bridge_of_order(h, &short, x, y, 5) {
                let cfg = RotationConfig::new(c.clone(), u, v, b);
                if let Some(f) = offer(rotate_c5(g, &cfg), LongMove::C5) {
                    return Some(f);
                }
            }
        }
        None
    }

    fn bridge_of_order(&self, h: &VertexSet, short: &Path, x: usize, y: usize, min_order: usize) -> Option<Path> {
        if short.order() >= min_order {
            Some(short.clone())
        } else {
            long_bridge(self.g, h, x, y, min_order, BRIDGE_BUDGET)
        }
    }
}

/// An `x`–`y` path inside `h` on at least `min_order` vertices, by bounded
/// depth-first search preferring short completions.
pub fn long_bridge(g: &Graph, h: &VertexSet, x: usize, y: usize, min_order: usize, budget: u64) -> Option<Path> {
    fn go(
        g: &Graph,
        h: &VertexSet,
        y: usize,
        min_order: usize,
        path: &mut Vec<usize>,
        on: &mut VertexSet,
        nodes: &mut u64,
        budget: u64,
    ) -> bool {
        *nodes += 1;
        if *nodes > budget {
            return false;
        }
        let last = *path.last().expect("non-empty");
        if last == y {
            return path.len() >= min_order;
        }
        let mut next = g.neighbors(last).intersection(h);
        next.difference_with(on);
        // Close at y only once the path is long enough.
        if next.contains(y) && path.len() + 1 >= min_order {
            path.push(y);
            return true;
        }
        next.remove(y);
        for w in next.iter() {
            path.push(w);
            on.insert(w);
            if go(g, h, y, min_order, path, on, nodes, budget) {
                return true;
            }
            on.remove(w);
            path.pop();
        }
        false
    }
    if x == y {
        return (min_order <= 1).then(|| Path::from_vertices(vec![x]));
    }
    let mut path = vec![x];
    let mut on = VertexSet::singleton(g.n(), x);
    let mut nodes = 0;
    go(g, h, y, min_order, &mut path, &mut on, &mut nodes, budget).then(|| Path::from_vertices(path))
}
