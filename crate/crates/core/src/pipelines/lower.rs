//! Short cycles: direct constructions up to length 7, a cycle-versus-
//! independent-set search when `n/α` is the larger bound, and otherwise an
//! even cycle among odd-anchored edges with one anchor spliced in.

use crate::cycle::{validate_cycle, Direction, OrientedCycle};
use crate::error::{Error, Result};
use crate::finders::even_cycle::find_even_cycle;
use crate::finders::odd_anchor::{odd_anchor_subgraph_with, DEFAULT_RETRY_BUDGET};
use crate::finders::ramsey::{find_cycle_or_independent_set, CycleOrIndependent};
use crate::finders::short_cycles::find_short_cycle_unchecked;
use crate::graph::{ConditionProfile, Graph};
use crate::pipelines::params::PipelineParams;
use crate::pipelines::provenance::{accept, with_fallback, Pipeline, Provenance, RangeCycle};

/// Result of the odd-anchor branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorSplice {
    pub cycle: OrientedCycle,
    /// The even cycle found among anchored edges.
    pub even_cycle: OrientedCycle,
    /// Anchor length `i` of the chosen edge class (3 or 5).
    pub anchor_len: usize,
    /// The edge replaced by its anchor, for odd lengths.
    pub spliced_edge: Option<(usize, usize)>,
}

pub fn lower_range(g: &Graph, ell: usize, params: &PipelineParams) -> Result<RangeCycle> {
    let prof = ConditionProfile::compute_with_budget(g, params.alpha_budget)?;
    lower_range_with_profile(g, &prof, ell, params)
}

pub fn lower_range_with_profile(
    g: &Graph,
    prof: &ConditionProfile,
    ell: usize,
    params: &PipelineParams,
) -> Result<RangeCycle> {
    check(g, prof, ell)?;
    with_fallback(g, ell, params, Pipeline::LowerRange, || {
        lower_range_faithful(g, prof, ell, params)
    })
}

fn check(g: &Graph, prof: &ConditionProfile, ell: usize) -> Result<()> {
    if ell < 3 || ell > g.n() {
        return Err(Error::Precondition(format!("length {ell} outside [3, {}]", g.n())));
    }
    if !prof.min_degree_exceeds_alpha() {
        return Err(Error::Precondition(format!(
            "minimum degree {} does not exceed independence number {}",
            prof.min_degree, prof.alpha
        )));
    }
    Ok(())
}

/// True when `n/α >= δα`, selecting the cycle-or-independent-set branch.
pub fn lower_uses_ramsey(n: usize, alpha: usize, delta: f64) -> bool {
    n as f64 / alpha.max(1) as f64 >= delta * alpha as f64
}

/// The construction alone; errors instead of falling back.
pub fn lower_range_faithful(
    g: &Graph,
    prof: &ConditionProfile,
    ell: usize,
    params: &PipelineParams,
) -> Result<RangeCycle> {
    check(g, prof, ell)?;
    if ell <= 7 {
        let sc = find_short_cycle_unchecked(g, ell, params.search_budget)?;
        let fallback = sc.is_fallback();
        let mut rc = accept(g, ell, sc.cycle, Pipeline::LowerRange, "short-cycles")?;
        if fallback {
            rc.provenance = Provenance::fallback(Pipeline::LowerRange, "short-cycles search");
        }
        return Ok(rc);
    }
    if lower_uses_ramsey(g.n(), prof.alpha, params.delta) {
        return match find_cycle_or_independent_set(g, ell, prof.alpha + 1, params.search_budget)? {
            CycleOrIndependent::Cycle(c) => accept(g, ell, c, Pipeline::LowerRange, "cycle-or-independent-set"),
            CycleOrIndependent::IndependentSet(s) => Err(Error::IndependentSetWitness(s)),
            CycleOrIndependent::Neither => Err(Error::Stall(format!(
                "search for a {ell}-cycle or an independent set of size {} was inconclusive",
                prof.alpha + 1
            ))),
        };
    }
    let sp = lower_range_anchor(g, prof.alpha, ell, params)?;
    accept(g, ell, sp.cycle, Pipeline::LowerRange, "odd-anchor")
}

/// The odd-anchor branch: an even cycle of length `2k` inside the edges
/// anchored by `i`-cycles, with `2k = ℓ` for even `ℓ` and `2k = ℓ - i + 2`
/// for odd `ℓ`, where one edge is then replaced by its anchor, giving
/// `|C'| = |C| - 1 + (i - 1) = ℓ`.
pub fn lower_range_anchor(g: &Graph, alpha: usize, ell: usize, params: &PipelineParams) -> Result<AnchorSplice> {
    let h = odd_anchor_subgraph_with(g, alpha, params.seed, DEFAULT_RETRY_BUDGET)?;
    let (e3, e5) = (h.split(3), h.split(5));
    let order = if 2 * e3.len() >= h.host_edges.len() {
        [3, 5]
    } else {
        [5, 3]
    };
    let mut last = Error::Stall("no anchored edge class".into());
    for i in order {
        let edges = if i == 3 { &e3 } else { &e5 };
        if edges.is_empty() {
            continue;
        }
        let two_k = if ell % 2 == 0 { ell } else { (ell + 2).saturating_sub(i) };
        if two_k < 4 {
            last = Error::Stall(format!("even length {two_k} too small for anchor class {i}"));
            continue;
        }
        let hi = g.spanning_subgraph(edges.iter().copied())?;
        let even = match find_even_cycle(&hi, two_k, params.search_budget) {
            Ok(c) => c,
            Err(e) => {
                last = e;
                continue;
            }
        };
        validate_cycle(g, &even).map_err(Error::InvalidCycle)?;
        if ell % 2 == 0 {
            return Ok(AnchorSplice {
                cycle: even.clone(),
                even_cycle: even,
                anchor_len: i,
                spliced_edge: None,
            });
        }
        let (a, b) = even.edges().next().expect("cycle has edges");
        let key = (a.min(b), a.max(b));
        let anchor = &h.anchors[&key];
        let cycle = splice_anchor(g, &even, a, b, anchor)?;
        if cycle.len() != even.len() - 1 + (i - 1) || cycle.len() != ell {
            return Err(Error::Stall(format!(
                "splice gave length {} from {} and anchor {i}",
                cycle.len(),
                even.len()
            )));
        }
        return Ok(AnchorSplice {
            cycle,
            even_cycle: even,
            anchor_len: i,
            spliced_edge: Some(key),
        });
    }
    Err(last)
}

/// Replaces the cycle edge `ab` of `c` by the rest of `anchor`.
pub fn splice_anchor(
    g: &Graph,
    c: &OrientedCycle,
    a: usize,
    b: usize,
    anchor: &OrientedCycle,
) -> Result<OrientedCycle> {
    if !c.has_cycle_edge(a, b) || !anchor.has_cycle_edge(a, b) {
        return Err(Error::Precondition(format!(
            "{a}-{b} is not shared by the cycle and its anchor"
        )));
    }
    // Walk c from b round to a, then the anchor from a back to b the long way.
    let c_dir = if c.successor(a, 1)? == b {
        c.clone()
    } else {
        c.reversed()
    };
    let mut seq = c_dir.walk_from(b)?;
    debug_assert_eq!(*seq.last().expect("non-empty"), a);
    let dir = if anchor.successor(a, 1)? == b {
        Direction::Backward
    } else {
        Direction::Forward
    };
    let arc = anchor.segment(a, b, dir)?;
    seq.extend(&arc.vertices()[1..arc.order() - 1]);
    OrientedCycle::new(g, seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_short() {
        let g = Graph::complete(10);
        let rc = lower_range(&g, 4, &PipelineParams::default()).unwrap();
        assert_eq!(rc.cycle.len(), 4);
        let rc = lower_range(&g, 9, &PipelineParams::default()).unwrap();
        assert_eq!(rc.provenance.detail, "cycle-or-independent-set");
    }

    #[test]
    fn anchor_branch_even_and_odd() {
        let g = Graph::cocktail_party(30);
        for ell in [6, 7, 8, 9, 10, 11] {
            let sp = lower_range_anchor(&g, 2, ell, &PipelineParams::default()).unwrap();
            assert_eq!(sp.cycle.len(), ell);
            validate_cycle(&g, &sp.cycle).unwrap();
            assert_eq!(sp.spliced_edge.is_some(), ell % 2 == 1);
        }
    }

    #[test]
    fn hypothesis_checked() {
        let g = Graph::cycle(8);
        assert!(matches!(
            lower_range(&g, 8, &PipelineParams::default()),
            Err(Error::Precondition(_))
        ));
    }
}
