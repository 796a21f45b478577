//! Middle-range cycles: a chorded path with a short return path, the return
//! path stretched to just above the target, then chords contracted.

use crate::bitset::VertexSet;
use crate::cycle::{contract_chords, OrientedCycle, Path};
use crate::error::{Error, Result};
use crate::graph::{ConditionProfile, Graph};
use crate::pipelines::mid_range::{mid_range_extend_traced, MIN_STEP};
use crate::pipelines::n_over_alpha::n_over_alpha_paths_with;
use crate::pipelines::params::PipelineParams;
use crate::pipelines::provenance::{accept, with_fallback, Pipeline, RangeCycle};
use crate::pipelines::shortening::shorten_path_within;

/// Extension step `max(MIN_STEP, ⌊ηn/(2α)⌋)`.
pub fn middle_step(n: usize, alpha: usize, eta: f64) -> usize {
    ((eta * n as f64 / (2.0 * alpha.max(1) as f64)).floor() as usize).max(MIN_STEP)
}

pub fn middle_range(g: &Graph, ell: usize, params: &PipelineParams) -> Result<RangeCycle> {
    let prof = ConditionProfile::compute_with_budget(g, params.alpha_budget)?;
    middle_range_with_profile(g, &prof, ell, params)
}

pub fn middle_range_with_profile(
    g: &Graph,
    prof: &ConditionProfile,
    ell: usize,
    params: &PipelineParams,
) -> Result<RangeCycle> {
    if ell < 3 || ell > g.n() {
        return Err(Error::Precondition(format!("length {ell} outside [3, {}]", g.n())));
    }
    with_fallback(g, ell, params, Pipeline::MiddleRange, || {
        middle_range_faithful(g, prof, ell, params)
    })
}

/// The construction alone; errors instead of falling back.
pub fn middle_range_faithful(
    g: &Graph,
    prof: &ConditionProfile,
    ell: usize,
    params: &PipelineParams,
) -> Result<RangeCycle> {
    params.validate()?;
    let n = g.n();
    if ell < 3 || ell > n {
        return Err(Error::Precondition(format!("length {ell} outside [3, {n}]")));
    }
    let pair = n_over_alpha_paths_with(g, prof.alpha, &params.with_delta(params.eta))?;
    let cp = &pair.p0;
    let p0 = &cp.path;
    if p0.length() >= ell {
        return Err(Error::Stall(format!(
            "chorded path of length {} already reaches {ell}",
            p0.length()
        )));
    }
    let target = ell - p0.length();
    let slack = cp.max_contraction();
    // Remove the interior of p0; indices stay, those vertices become isolated.
    let g1 = g.delete_vertices(&p0.interior_set(n));
    let allowed = p0.interior_set(n).complement();
    let step = middle_step(n, prof.alpha, params.eta);

    let mut p2 = pair.p1.clone();
    let mut steps = 0;
    let mut detail = "middle";
    while p2.length() < target || p2.length() > target + slack {
        steps += 1;
        if steps > params.step_budget {
            return Err(Error::BudgetExceeded {
                what: "middle-range adjustment",
                budget: params.step_budget as u64,
            });
        }
        p2 = if p2.length() < target {
            let r = step.min(2 * p2.length());
            if r < MIN_STEP {
                detail = "middle-with-ears";
                ear_extend(&g1, &p2, &allowed)
                    .ok_or_else(|| Error::Stall(format!("no ear lengthens the return path {p2:?}")))?
            } else {
                mid_range_extend_traced(&g1, &p2, r, prof.alpha, params.search_budget)?.path
            }
        } else {
            detail = "middle-with-shortening";
            shorten_path_within(&g1, &p2, &allowed, p2.length() - target)?
        };
    }
    let k_prime = p0.length() + p2.length() - ell;
    let mut seq = contract_chords(cp, k_prime)?.into_vertices();
    seq.extend(&p2.vertices()[1..p2.order() - 1]);
    let c = OrientedCycle::new(g, seq)?;
    accept(g, ell, c, Pipeline::MiddleRange, detail)
}

/// Replaces one edge of `p` by a path through one or two vertices of
/// `allowed` off `p`, for paths too short for a mid-range step.
fn ear_extend(g: &Graph, p: &Path, allowed: &VertexSet) -> Option<Path> {
    let vs = p.vertices();
    let off = allowed.difference(&p.vertex_set(g.n()));
    for i in 0..vs.len() - 1 {
        let (a, b) = (vs[i], vs[i + 1]);
        let common = g.neighbors(a).intersection(g.neighbors(b)).intersection(&off);
        let ear: Option<Vec<usize>> = common.first().map(|w| vec![w]).or_else(|| {
            let na = g.neighbors(a).intersection(&off);
            na.iter().find_map(|w| {
                g.neighbors(w)
                    .intersection(g.neighbors(b))
                    .intersection(&off)
                    .first()
                    .map(|x| vec![w, x])
            })
        });
        if let Some(ear) = ear {
            let mut out = vs[..=i].to_vec();
            out.extend(ear);
            out.extend(&vs[i + 1..]);
            return Some(Path::from_vertices(out));
        }
    }
    None
}
