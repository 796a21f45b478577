//! Top-level certifier: dispatches every length to the range whose window
//! accepts it and stores only validated cycles.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cycle::{validate_cycle, OrientedCycle};
use crate::error::{Error, Result};
use crate::graph::{ConditionProfile, Graph};
use crate::pipelines::lower::lower_range_faithful;
use crate::pipelines::middle::middle_range_faithful;
use crate::pipelines::params::PipelineParams;
use crate::pipelines::provenance::{fallback_cycle, Pipeline, Provenance, RangeCycle};
use crate::pipelines::upper::upper_range_faithful;
use crate::rotation::ce_hamilton_with_profile;

/// Relative slack on window boundaries, in favour of acceptance.
pub const WINDOW_TOLERANCE: f64 = 1e-9;

/// The three range windows for fixed `(n, α, δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Windows {
    pub n: usize,
    pub alpha: usize,
    pub delta: f64,
}

impl Windows {
    pub fn new(n: usize, alpha: usize, delta: f64) -> Self {
        Windows {
            n,
            alpha: alpha.max(1),
            delta,
        }
    }

    fn ratio(&self) -> f64 {
        self.n as f64 / self.alpha as f64
    }

    /// Least length accepted by the upper window: `ℓ >= n/(δα)`.
    pub fn upper_from(&self) -> usize {
        ceil_tol(self.ratio() / self.delta)
    }

    /// Whether `√n/2 <= α <= δ n^(2/3)`.
    pub fn middle_alpha_ok(&self) -> bool {
        let (n, a) = (self.n as f64, self.alpha as f64);
        le_tol(n.sqrt() / 2.0, a) && le_tol(a, self.delta * n.powf(2.0 / 3.0))
    }

    /// Length interval `n/α <= ℓ <= δ(n/α)^2`, if the α-condition holds.
    pub fn middle_interval(&self) -> Option<(usize, usize)> {
        if !self.middle_alpha_ok() {
            return None;
        }
        let r = self.ratio();
        let (lo, hi) = (ceil_tol(r), floor_tol(self.delta * r * r));
        (lo <= hi).then_some((lo, hi))
    }

    /// Greatest length accepted by the lower window: `ℓ <= max(n/α, δα)`.
    pub fn lower_to(&self) -> usize {
        floor_tol(self.ratio().max(self.delta * self.alpha as f64))
    }

    pub fn upper(&self, ell: usize) -> bool {
        ell >= self.upper_from()
    }

    pub fn middle(&self, ell: usize) -> bool {
        self.middle_interval().is_some_and(|(lo, hi)| lo <= ell && ell <= hi)
    }

    pub fn lower(&self, ell: usize) -> bool {
        ell >= 3 && ell <= self.lower_to()
    }

    /// Accepting ranges in dispatch order.
    pub fn accepting(&self, ell: usize) -> Vec<Pipeline> {
        let mut out = Vec::new();
        if self.upper(ell) {
            out.push(Pipeline::UpperRange);
        }
        if self.middle(ell) {
            out.push(Pipeline::MiddleRange);
        }
        if self.lower(ell) {
            out.push(Pipeline::LowerRange);
        }
        out
    }

    /// Lengths in `[3, n]` accepted by no window.
    pub fn gap_count(&self) -> usize {
        let mut covered = vec![(3, self.lower_to()), (self.upper_from(), self.n)];
        covered.extend(self.middle_interval());
        covered.retain(|&(lo, hi)| lo <= hi);
        covered.sort_unstable();
        let (mut next, mut gaps) = (3usize, 0usize);
        for (lo, hi) in covered {
            let lo = lo.max(3);
            let hi = hi.min(self.n);
            if lo > hi {
                continue;
            }
            if lo > next {
                gaps += lo - next;
            }
            next = next.max(hi + 1);
        }
        gaps + (self.n + 1).saturating_sub(next)
    }

    /// Smallest uncovered length, if any.
    pub fn first_gap(&self) -> Option<usize> {
        (3..=self.n).find(|&l| self.accepting(l).is_empty())
    }
}

fn ceil_tol(x: f64) -> usize {
    let c = (x * (1.0 - WINDOW_TOLERANCE)).ceil();
    if c <= 0.0 {
        0
    } else if c >= usize::MAX as f64 {
        usize::MAX
    } else {
        c as usize
    }
}

fn floor_tol(x: f64) -> usize {
    let f = (x * (1.0 + WINDOW_TOLERANCE)).floor();
    if f <= 0.0 {
        0
    } else {
        f as usize
    }
}

fn le_tol(a: f64, b: f64) -> bool {
    a <= b * (1.0 + WINDOW_TOLERANCE)
}

/// Outcome of scanning `(n, α, ℓ)` with `α <= n <= 4α²`, `3 <= ℓ <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DispatchScan {
    pub n_max: usize,
    pub pairs: u64,
    pub triples: u64,
    pub gaps: u64,
    /// Pairs `(n, α)` with at least one gap.
    pub gap_pairs: u64,
    /// Lexicographically first uncovered `(n, α, ℓ)`.
    pub first_gap: Option<(usize, usize, usize)>,
    /// Least `n` above which no pair has a gap, if the scan reached it.
    pub last_gap_n: Option<usize>,
}

pub fn dispatch_scan(n_max: usize, delta: f64) -> DispatchScan {
    let mut scan = DispatchScan {
        n_max,
        pairs: 0,
        triples: 0,
        gaps: 0,
        gap_pairs: 0,
        first_gap: None,
        last_gap_n: None,
    };
    for n in 3..=n_max {
        for alpha in 1..=n {
            if n > 4 * alpha * alpha {
                continue;
            }
            let w = Windows::new(n, alpha, delta);
            scan.pairs += 1;
            scan.triples += (n - 2) as u64;
            let gaps = w.gap_count();
            if gaps > 0 {
                scan.gaps += gaps as u64;
                scan.gap_pairs += 1;
                scan.last_gap_n = Some(n);
                if scan.first_gap.is_none() {
                    scan.first_gap = w.first_gap().map(|l| (n, alpha, l));
                }
            }
        }
    }
    scan
}

/// A length-indexed set of validated cycles with their provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub profile: ConditionProfile,
    /// Whether `κ > α`.
    pub hypothesis_holds: bool,
    pub cycles: BTreeMap<usize, OrientedCycle>,
    pub provenance: BTreeMap<usize, Provenance>,
    pub missing: Vec<usize>,
}

impl Certificate {
    pub fn new(profile: ConditionProfile) -> Self {
        Certificate {
            hypothesis_holds: profile.kappa > profile.alpha,
            profile,
            cycles: BTreeMap::new(),
            provenance: BTreeMap::new(),
            missing: Vec::new(),
        }
    }

    /// Validates and stores a cycle under its own length.
    pub fn insert(&mut self, g: &Graph, rc: RangeCycle) -> Result<()> {
        validate_cycle(g, &rc.cycle).map_err(Error::InvalidCycle)?;
        let ell = rc.cycle.len();
        self.missing.retain(|&m| m != ell);
        self.cycles.insert(ell, rc.cycle);
        self.provenance.insert(ell, rc.provenance);
        Ok(())
    }

    pub fn is_pancyclic(&self) -> bool {
        self.profile.n >= 3 && self.missing.is_empty() && self.cycles.len() == self.profile.n - 2
    }

    /// Lengths produced by bounded search rather than a construction.
    pub fn fallback_lengths(&self) -> Vec<usize> {
        self.provenance
            .iter()
            .filter(|(_, p)| p.fallback)
            .map(|(&l, _)| l)
            .collect()
    }

    /// Re-checks every stored cycle against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        for (&ell, c) in &self.cycles {
            validate_cycle(g, c).map_err(Error::InvalidCycle)?;
            if c.len() != ell {
                return Err(Error::Precondition(format!(
                    "cycle stored under {ell} has length {}",
                    c.len()
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}

/// Certifies every length in `[3, n]`. Only the profile computation can
/// fail; unresolved lengths are listed in `missing`.
pub fn certify_pancyclic(g: &Graph, params: &PipelineParams) -> Result<Certificate> {
    params.validate()?;
    let prof = ConditionProfile::compute_with_budget(g, params.alpha_budget)?;
    Ok(certify_with_profile(g, &prof, params))
}

pub fn certify_with_profile(g: &Graph, prof: &ConditionProfile, params: &PipelineParams) -> Certificate {
    let mut cert = Certificate::new(*prof);
    let n = g.n();
    if n < 3 {
        return cert;
    }
    for ell in 3..=n {
        match certify_length(g, prof, ell, params) {
            Ok(rc) => {
                if cert.insert(g, rc).is_err() {
                    cert.missing.push(ell);
                }
            }
            Err(_) => cert.missing.push(ell),
        }
    }
    cert
}

/// One length of the dispatch, independent of every other length.
pub fn certify_length(g: &Graph, prof: &ConditionProfile, ell: usize, params: &PipelineParams) -> Result<RangeCycle> {
    let n = g.n();
    if ell < 3 || ell > n {
        return Err(Error::Precondition(format!("length {ell} outside [3, {n}]")));
    }
    if prof.kappa <= prof.alpha {
        return fallback_cycle(
            g,
            ell,
            params,
            Pipeline::HypothesisFails,
            "connectivity does not exceed independence number",
        );
    }
    if ell == n {
        return match ce_hamilton_with_profile(g, prof) {
            Ok((c, moves)) if c.len() == n => Ok(RangeCycle {
                cycle: c,
                provenance: Provenance::faithful(Pipeline::Hamilton, format!("{moves} extensions")),
            }),
            Ok(_) => fallback_cycle(g, ell, params, Pipeline::Hamilton, "extension stalled"),
            Err(e) => fallback_cycle(g, ell, params, Pipeline::Hamilton, &e.to_string()),
        };
    }
    if n >= 4 * prof.alpha * prof.alpha {
        return fallback_cycle(g, ell, params, Pipeline::ExternalTheorem, "external-theorem fallback");
    }
    let windows = Windows::new(n, prof.alpha, params.delta);
    let accepting = windows.accepting(ell);
    let mut failures = Vec::new();
    for &p in &accepting {
        match run_range(g, prof, ell, params, p) {
            Ok(rc) => return Ok(rc),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    if let Some(&first) = accepting.first() {
        return fallback_cycle(g, ell, params, first, &failures.join("; "));
    }
    // No window accepts: the constructions are still attempted, outside
    // their proven range, before bounded search.
    for p in [Pipeline::UpperRange, Pipeline::MiddleRange, Pipeline::LowerRange] {
        match run_range(g, prof, ell, params, p) {
            Ok(rc) => {
                return Ok(RangeCycle {
                    cycle: rc.cycle,
                    provenance: Provenance {
                        pipeline: Pipeline::WindowGap,
                        fallback: rc.provenance.fallback,
                        detail: format!("{p} {}", rc.provenance.detail),
                    },
                })
            }
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    fallback_cycle(g, ell, params, Pipeline::WindowGap, &failures.join("; "))
}

fn run_range(
    g: &Graph,
    prof: &ConditionProfile,
    ell: usize,
    params: &PipelineParams,
    p: Pipeline,
) -> Result<RangeCycle> {
    match p {
        Pipeline::UpperRange => upper_range_faithful(g, prof, ell, params),
        Pipeline::MiddleRange => middle_range_faithful(g, prof, ell, params),
        Pipeline::LowerRange => lower_range_faithful(g, prof, ell, params),
        other => Err(Error::Precondition(format!("{other} is not a range construction"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_certificate() {
        let g = Graph::complete(6);
        let cert = certify_pancyclic(&g, &PipelineParams::default()).unwrap();
        assert!(cert.is_pancyclic());
        assert_eq!(cert.cycles.keys().copied().collect::<Vec<_>>(), vec![3, 4, 5, 6]);
        cert.verify(&g).unwrap();
    }

    #[test]
    fn bipartite_hypothesis_fails() {
        let g = Graph::complete_bipartite(3, 3);
        let cert = certify_pancyclic(&g, &PipelineParams::default()).unwrap();
        assert!(!cert.hypothesis_holds);
        assert_eq!(cert.cycles.keys().copied().collect::<Vec<_>>(), vec![4, 6]);
        assert_eq!(cert.missing, vec![3, 5]);
        assert!(cert
            .provenance
            .values()
            .all(|p| p.pipeline == Pipeline::HypothesisFails));
    }

    #[test]
    fn json_shape() {
        let cert = certify_pancyclic(&Graph::complete(4), &PipelineParams::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
        for key in ["n", "alpha", "kappa", "cycles", "provenance", "missing"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["cycles"]["3"].as_array().unwrap().len(), 3);
        let back: Certificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn gap_count_matches_scan() {
        for n in 3..=60 {
            for alpha in 1..=n {
                let w = Windows::new(n, alpha, 0.01);
                let brute = (3..=n).filter(|&l| w.accepting(l).is_empty()).count();
                assert_eq!(w.gap_count(), brute, "n={n} alpha={alpha}");
            }
        }
    }

    #[test]
    fn wide_delta_windows() {
        let w = Windows::new(100, 10, 0.5);
        assert_eq!(w.upper_from(), 20);
        assert_eq!(w.lower_to(), 10);
        assert!(w.upper(20) && !w.upper(19));
    }
}
