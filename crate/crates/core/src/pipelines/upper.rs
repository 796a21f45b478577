//! Long cycles: a chorded path closed into a short cycle, grown, then either
//! completed through the P5-free remainder or shortened back to length.

use crate::chorded::{close_path, grow_chorded_path};
use crate::cycle::contract_chords;
use crate::cycle::{Direction, OrientedCycle, Path};
use crate::error::{Error, Result};
use crate::graph::{ConditionProfile, Graph};
use crate::pipelines::cycle_chords::shorten_cycle_by;
use crate::pipelines::long::lemma_long_with;
use crate::pipelines::params::PipelineParams;
use crate::pipelines::provenance::{accept, with_fallback, Pipeline, RangeCycle};
use crate::pipelines::remainder::length3_remainder_relaxed;
use crate::pipelines::shortening::shorten_path_within;
use crate::rotation::ce_hamilton_with_profile;

/// Chord count of the starting path: `max(1, min(⌊ηα⌋, ⌊ℓ/6⌋))`.
pub fn upper_chord_count(alpha: usize, ell: usize, eta: f64) -> usize {
    ((eta * alpha as f64).floor() as usize).min(ell / 6).max(1)
}

/// A cycle of length `ell`, falling back to bounded search on any stall.
pub fn upper_range(g: &Graph, ell: usize, params: &PipelineParams) -> Result<RangeCycle> {
    let prof = ConditionProfile::compute_with_budget(g, params.alpha_budget)?;
    upper_range_with_profile(g, &prof, ell, params)
}

pub fn upper_range_with_profile(
    g: &Graph,
    prof: &ConditionProfile,
    ell: usize,
    params: &PipelineParams,
) -> Result<RangeCycle> {
    check_length(g, ell)?;
    with_fallback(g, ell, params, Pipeline::UpperRange, || {
        upper_range_faithful(g, prof, ell, params)
    })
}

fn check_length(g: &Graph, ell: usize) -> Result<()> {
    if ell < 3 || ell > g.n() {
        return Err(Error::Precondition(format!("length {ell} outside [3, {}]", g.n())));
    }
    Ok(())
}

/// The construction alone; errors instead of falling back.
pub fn upper_range_faithful(
    g: &Graph,
    prof: &ConditionProfile,
    ell: usize,
    params: &PipelineParams,
) -> Result<RangeCycle> {
    check_length(g, ell)?;
    params.validate()?;
    if ell == g.n() {
        let (c, _) = ce_hamilton_with_profile(g, prof)?;
        return accept(g, ell, c, Pipeline::UpperRange, "hamilton");
    }
    let k = upper_chord_count(prof.alpha, ell, params.eta);
    let cp = grow_chorded_path(g, k)?;
    let p0 = cp.path.clone();
    let c0 = close_path(g, &p0, ell)?;
    let c1 = lemma_long_with(g, &c0, &p0, ell, prof.alpha, &params.with_delta(params.eta))?.cycle;

    if c1.len() < ell {
        let c = length3_remainder_relaxed(g, &c1, ell, params)?;
        return accept(g, ell, c, Pipeline::UpperRange, "remainder");
    }
    if c1.len() == ell {
        return accept(g, ell, c1, Pipeline::UpperRange, "exact");
    }
    if c1.contains_path(&p0) {
        let c = marked_path_ladder(g, &c1, &cp, ell, params)?;
        return accept(g, ell, c, Pipeline::UpperRange, "marked-path-ladder");
    }
    if let Ok(c) = shorten_cycle_by(g, &c1, c1.len() - ell) {
        return accept(g, ell, c, Pipeline::UpperRange, "chord-shortening");
    }
    let c = half_split(g, &c1, ell, params)?;
    accept(g, ell, c, Pipeline::UpperRange, "half-split")
}

/// The rest of `c` after removing the edges of its subpath `p0`, from the
/// last vertex of `p0` back to the first.
fn complement_arc(c: &OrientedCycle, p0: &Path) -> Result<Path> {
    let (x, y) = (p0.first(), p0.last());
    let forward = c.successor(x, 1)? == p0.vertices()[1];
    let dir = if forward {
        Direction::Forward
    } else {
        Direction::Backward
    };
    c.segment(y, x, dir)
}

/// Shortens `p` step by step inside `allowed` while staying at least
/// `floor` long, until within `slack` of it.
fn shorten_to(
    g: &Graph,
    mut p: Path,
    allowed: &crate::bitset::VertexSet,
    floor: usize,
    slack: usize,
    budget: usize,
) -> Result<Path> {
    let mut steps = 0;
    while p.length() > floor + slack {
        steps += 1;
        if steps > budget {
            return Err(Error::BudgetExceeded {
                what: "path shortening",
                budget: budget as u64,
            });
        }
        p = shorten_path_within(g, &p, allowed, p.length() - floor)?;
    }
    Ok(p)
}

/// `P0 ⊆ C1`: shorten the complementary arc outside the interior of `P0`,
/// then contract chords of `P0` to hit `ell` exactly.
fn marked_path_ladder(
    g: &Graph,
    c1: &OrientedCycle,
    cp: &crate::cycle::ChordedPath,
    ell: usize,
    params: &PipelineParams,
) -> Result<OrientedCycle> {
    let p0 = &cp.path;
    let p1 = complement_arc(c1, p0)?;
    let allowed = p0.interior_set(g.n()).complement();
    let target = ell - p0.length();
    let p2 = shorten_to(g, p1, &allowed, target, cp.max_contraction(), params.step_budget)?;
    let k_prime = p0.length() + p2.length() - ell;
    let p0_short = contract_chords(cp, k_prime)?;
    let mut seq = p0_short.into_vertices();
    // p2 runs from the last vertex of p0 back to the first.
    seq.extend(&p2.vertices()[1..p2.order() - 1]);
    Ok(OrientedCycle::new(g, seq)?)
}

/// Keeps an arc of about `ell/2` and shortens the rest inside its own vertex
/// set, then removes the remaining excess through short chords.
fn half_split(g: &Graph, c1: &OrientedCycle, ell: usize, params: &PipelineParams) -> Result<OrientedCycle> {
    let len = c1.len();
    let keep = (ell / 2).max(2);
    let mut last_err = Error::Stall("no split point".into());
    for s in (0..len).step_by((len / 8).max(1)) {
        let a = c1.at(s);
        let b = c1.at((s + keep) % len);
        let rest = c1.segment(b, a, Direction::Forward)?;
        let allowed = rest.vertex_set(g.n());
        let floor = ell - keep;
        let attempt = shorten_to(g, rest, &allowed, floor, 0, params.step_budget).and_then(|p3| {
            let mut seq = c1.segment(a, b, Direction::Forward)?.into_vertices();
            seq.extend(&p3.vertices()[1..p3.order() - 1]);
            let c = OrientedCycle::new(g, seq)?;
            shorten_cycle_by(g, &c, c.len() - ell)
        });
        match attempt {
            Ok(c) => return Ok(c),
            Err(e) => last_err = e,
        }
    }
    Err(Error::Stall(format!("half split failed: {last_err}")))
}
