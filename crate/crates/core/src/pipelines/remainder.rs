//! Closing the gap to an exact length from a short cycle whose complement has
//! no path on five vertices.

use crate::bitset::VertexSet;
use crate::cycle::{validate_cycle, OrientedCycle};
use crate::error::{Error, Result};
use crate::graph::{ConditionProfile, Graph};
use crate::pipelines::cycle_chords::{literal_chords, shorten_cycle_by};
use crate::pipelines::p5free::{absorb_leaf, extend_keeping_forest, find_p5_within};
use crate::pipelines::params::PipelineParams;
use crate::rotation::extend_avoiding;

/// Non-intersecting span-2/3 chords the starting cycle must carry.
pub const REQUIRED_CHORDS: usize = 18;

/// A cycle of length exactly `ell`, grown from `c0` through the three-case
/// ladder. Checks every precondition: `|c0| < ell <= n`, at least
/// [`REQUIRED_CHORDS`] chords with disjoint skipped interiors, a P5-free
/// complement and `κ > α`.
pub fn length3_remainder(g: &Graph, c0: &OrientedCycle, ell: usize, params: &PipelineParams) -> Result<OrientedCycle> {
    check_shape(g, c0, ell)?;
    let chords = literal_chords(g, c0).len();
    if chords < REQUIRED_CHORDS {
        return Err(Error::Precondition(format!(
            "cycle carries {chords} non-intersecting short chords, need {REQUIRED_CHORDS}"
        )));
    }
    let prof = ConditionProfile::compute_with_budget(g, params.alpha_budget)?;
    if !prof.kappa_exceeds_alpha() {
        return Err(Error::Precondition(format!(
            "connectivity {} does not exceed independence number {}",
            prof.kappa, prof.alpha
        )));
    }
    ladder(g, c0, ell, params.step_budget)
}

/// [`length3_remainder`] without the chord count and connectivity checks; the
/// final shortening may then stall.
pub fn length3_remainder_relaxed(
    g: &Graph,
    c0: &OrientedCycle,
    ell: usize,
    params: &PipelineParams,
) -> Result<OrientedCycle> {
    check_shape(g, c0, ell)?;
    ladder(g, c0, ell, params.step_budget)
}

fn check_shape(g: &Graph, c0: &OrientedCycle, ell: usize) -> Result<()> {
    validate_cycle(g, c0).map_err(Error::InvalidCycle)?;
    if c0.len() >= ell || ell > g.n() {
        return Err(Error::Precondition(format!(
            "need |c0| < ell <= n, got |c0|={} ell={ell} n={}",
            c0.len(),
            g.n()
        )));
    }
    let outside = c0.vertex_set(g.n()).complement();
    if let Some(p) = find_p5_within(g, &outside) {
        return Err(Error::Precondition(format!(
            "complement of the cycle contains the path {p:?}"
        )));
    }
    Ok(())
}

/// Union of the tree components of `g - V(c)`.
fn tree_part(g: &Graph, c: &OrientedCycle) -> VertexSet {
    let n = g.n();
    let mut f = VertexSet::new(n);
    for h in g.components_within(&c.vertex_set(n).complement()) {
        if g.is_forest_within(&h) {
            f.union_with(&h);
        }
    }
    f
}

/// A vertex of `set` with at most one neighbour in `set`.
fn leaf(g: &Graph, set: &VertexSet) -> Option<usize> {
    set.iter().find(|&v| g.neighbors(v).intersection_len(set) <= 1)
}

fn ladder(g: &Graph, c0: &OrientedCycle, ell: usize, budget: usize) -> Result<OrientedCycle> {
    let mut trace = Vec::new();
    let out = run_ladder(g, c0, ell, budget, &mut trace).map_err(|e| match e {
        Error::Precondition(_) => e,
        other => Error::Stall(format!("{other}; trace: {}", trace.join(" | "))),
    })?;
    if out.len() != ell {
        return Err(Error::Stall(format!(
            "ladder ended at length {} instead of {ell}; trace: {}",
            out.len(),
            trace.join(" | ")
        )));
    }
    validate_cycle(g, &out).map_err(Error::InvalidCycle)?;
    Ok(out)
}

fn run_ladder(
    g: &Graph,
    c0: &OrientedCycle,
    ell: usize,
    budget: usize,
    trace: &mut Vec<String>,
) -> Result<OrientedCycle> {
    let n = g.n();
    let stall = |msg: &str| Error::Stall(msg.to_string());
    let mut c = c0.clone();
    for i in 1..=3 {
        let f = tree_part(g, &c);
        if f.len() >= i || c.len() + f.len() >= ell {
            trace.push(format!("C{i}=C{} (|C|={}, |F|={})", i - 1, c.len(), f.len()));
            continue;
        }
        let rest = c.vertex_set(n).complement().difference(&f);
        let h = g
            .components_within(&rest)
            .into_iter()
            .next()
            .ok_or_else(|| stall("no non-tree component left to extend into"))?;
        c = extend_keeping_forest(g, &c, &h)?;
        trace.push(format!("C{i}: |C|={}", c.len()));
    }
    let f3 = tree_part(g, &c);
    let len3 = c.len();
    trace.push(format!("|C3|={len3}, |F3|={}", f3.len()));

    if len3 == ell + 2 {
        return shorten_cycle_by(g, &c, 2);
    }
    if len3 == ell + 1 || len3 == ell + 3 {
        let u = leaf(g, &f3).ok_or_else(|| stall("tree part is empty"))?;
        let h = g.reach_within(u, &f3);
        let c4 = absorb_leaf(g, &c, &h, u)?;
        trace.push(format!("absorbed leaf {u}: |C4|={}", c4.len()));
        return shorten_cycle_by(g, &c4, c4.len() - ell);
    }
    if len3 > ell {
        return Err(stall("third cycle overshoots by more than three"));
    }

    let mut c4 = c;
    let mut steps = 0;
    while c4.len() + 3 < ell {
        let on = c4.vertex_set(n);
        let free = on.complement().difference(&f3);
        let Some(w) = free.first() else { break };
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExceeded {
                what: "remainder growth",
                budget: budget as u64,
            });
        }
        let h = g.reach_within(w, &on.complement());
        c4 = extend_avoiding(g, &c4, &h, w, None)?;
    }
    let r = ell - c4.len();
    trace.push(format!("|C4|={}, r={r}", c4.len()));
    if r > f3.len() {
        return Err(stall("tree part is smaller than the remaining gap"));
    }
    let mut rest = f3;
    for _ in 0..r {
        let u = leaf(g, &rest).ok_or_else(|| stall("tree part ran out of leaves"))?;
        let h = g.reach_within(u, &rest);
        c4 = absorb_leaf(g, &c4, &h, u)?;
        rest.remove(u);
    }
    Ok(c4)
}
