//! Graph streams: exhaustive labelled enumeration, graph6 files, and
//! rejection-sampled instances meeting a degree or connectivity condition.

use std::path::Path;

use pancyclic::io::from_graph6;
use pancyclic::{ConditionProfile, Error, Graph, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Largest order for exhaustive labelled enumeration.
pub const MAX_LABELED_N: usize = 7;

/// Number of labelled graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labelled graph whose edge `k` (in `(0,1), (0,2), .., (n-2,n-1)`
/// order) is present iff bit `k` of `mask` is set.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((a, b));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("pairs in range")
}

/// Every labelled graph on `n <= 7` vertices once, in mask order.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_LABELED_N {
        return Err(Error::Precondition(format!(
            "exhaustive enumeration is limited to n <= {MAX_LABELED_N}; supply a graph6 file for n = {n}"
        )));
    }
    Ok((0..labeled_count(n)).map(move |m| graph_from_mask(n, m)))
}

/// One graph per non-empty line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with(">>"))
        .map(from_graph6)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Target {
    /// `κ > α`.
    KappaExceedsAlpha,
    /// `δ > α`.
    MinDegreeExceedsAlpha,
}

impl Target {
    pub fn holds(self, prof: &ConditionProfile) -> bool {
        match self {
            Target::KappaExceedsAlpha => prof.kappa_exceeds_alpha(),
            Target::MinDegreeExceedsAlpha => prof.min_degree_exceeds_alpha(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub p_start: f64,
    pub p_step: f64,
    pub p_max: f64,
    pub tries_per_p: u32,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            p_start: 0.5,
            p_step: 0.05,
            p_max: 1.0,
            tries_per_p: 8,
        }
    }
}

/// `G(n, p)` samples with `p` swept upward until the exact profile meets
/// `target`; returns the graph with its verified profile.
pub fn random_condition_graph(n: usize, target: Target, seed: u64) -> Result<(Graph, ConditionProfile)> {
    random_condition_graph_with(n, target, seed, SweepConfig::default())
}

pub fn random_condition_graph_with(
    n: usize,
    target: Target,
    seed: u64,
    cfg: SweepConfig,
) -> Result<(Graph, ConditionProfile)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = cfg.p_start;
    let mut drawn = 0u64;
    while p <= cfg.p_max + 1e-12 {
        for _ in 0..cfg.tries_per_p {
            drawn += 1;
            let g = gnp(n, p.min(1.0), &mut rng);
            let prof = ConditionProfile::compute(&g)?;
            if target.holds(&prof) {
                return Ok((g, prof));
            }
        }
        p += cfg.p_step;
    }
    Err(Error::BudgetExceeded {
        what: "condition graph rejection sampling",
        budget: drawn,
    })
}

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs in range")
}
