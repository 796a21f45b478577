//! Exhaustive search for graphs with `κ > α` that are not pancyclic, with
//! every hypothesis hit also certified and compared against the oracle.

use std::collections::BTreeMap;
use std::path::PathBuf;

use pancyclic::connectivity::vertex_connectivity;
use pancyclic::independence::independence_number;
use pancyclic::io::to_graph6;
use pancyclic::pipelines::{certify_with_profile, PipelineParams};
use pancyclic::{ConditionProfile, Error, Graph, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::generate::{graph_from_mask, labeled_count, read_graph6_file, MAX_LABELED_N};
use crate::oracle::{is_pancyclic_brute, OracleAnswer, ORACLE_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum HuntSource {
    /// Every labelled graph on `3..=n_max` vertices.
    Internal,
    /// Graphs read from a graph6 file, restricted to `n <= n_max`.
    Graph6(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntConfig {
    pub n_max: usize,
    pub source: HuntSource,
    pub params: PipelineParams,
    pub oracle_budget: u64,
    /// Worker threads; `None` uses every core.
    pub jobs: Option<usize>,
}

impl HuntConfig {
    pub fn internal(n_max: usize) -> Self {
        HuntConfig {
            n_max,
            source: HuntSource::Internal,
            params: PipelineParams::default(),
            oracle_budget: ORACLE_BUDGET,
            jobs: None,
        }
    }
}

/// Oracle and certificate differ on one length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Disagreement {
    pub graph6: String,
    pub length: usize,
    pub oracle_found: bool,
    pub certified: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct LengthTally {
    pub lengths: u64,
    pub fallback: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntReport {
    pub n_range: (usize, usize),
    pub graphs_scanned: u64,
    pub hypothesis_hits: u64,
    /// graph6 strings of hypothesis hits missing some length.
    pub counterexamples: Vec<String>,
    pub disagreements: Vec<Disagreement>,
    /// Lengths where the oracle ran out of budget.
    pub oracle_unknown: u64,
    pub complete_certificates: u64,
    /// Certificates failing re-verification (always a bug).
    pub invalid_certificates: Vec<String>,
    /// Per pipeline: lengths dispatched and how many needed bounded search.
    pub pipelines: BTreeMap<String, LengthTally>,
    /// Per pipeline: share of its lengths produced by bounded search.
    pub fallback_rate: BTreeMap<String, f64>,
}

impl HuntReport {
    fn empty(n_range: (usize, usize)) -> Self {
        HuntReport {
            n_range,
            graphs_scanned: 0,
            hypothesis_hits: 0,
            counterexamples: Vec::new(),
            disagreements: Vec::new(),
            oracle_unknown: 0,
            complete_certificates: 0,
            invalid_certificates: Vec::new(),
            pipelines: BTreeMap::new(),
            fallback_rate: BTreeMap::new(),
        }
    }

    fn merge(mut self, other: HuntReport) -> Self {
        self.graphs_scanned += other.graphs_scanned;
        self.hypothesis_hits += other.hypothesis_hits;
        self.counterexamples.extend(other.counterexamples);
        self.disagreements.extend(other.disagreements);
        self.oracle_unknown += other.oracle_unknown;
        self.complete_certificates += other.complete_certificates;
        self.invalid_certificates.extend(other.invalid_certificates);
        for (k, t) in other.pipelines {
            let e = self.pipelines.entry(k).or_default();
            e.lengths += t.lengths;
            e.fallback += t.fallback;
        }
        self
    }

    fn finish(mut self) -> Self {
        self.counterexamples.sort();
        self.disagreements.sort();
        self.invalid_certificates.sort();
        self.fallback_rate = self
            .pipelines
            .iter()
            .map(|(k, t)| (k.clone(), t.fallback as f64 / t.lengths.max(1) as f64))
            .collect();
        self
    }

    /// No counterexample, disagreement or invalid certificate.
    pub fn clean(&self) -> bool {
        self.counterexamples.is_empty() && self.disagreements.is_empty() && self.invalid_certificates.is_empty()
    }
}

/// `κ > α`, computed lazily: α only when `δ >= 2`, κ only when `δ > α`.
pub fn hypothesis_profile(g: &Graph) -> Result<Option<ConditionProfile>> {
    let min_degree = g.min_degree();
    if g.n() < 3 || min_degree < 2 {
        return Ok(None);
    }
    let alpha = independence_number(g)?;
    if min_degree <= alpha {
        return Ok(None);
    }
    let kappa = vertex_connectivity(g)?;
    if kappa <= alpha {
        return Ok(None);
    }
    Ok(Some(ConditionProfile {
        n: g.n(),
        alpha,
        kappa,
        min_degree,
    }))
}

/// Scans one graph into a single-graph report.
pub fn scan_graph(g: &Graph, params: &PipelineParams, oracle_budget: u64, report: &mut HuntReport) -> Result<()> {
    report.graphs_scanned += 1;
    let Some(prof) = hypothesis_profile(g)? else {
        return Ok(());
    };
    report.hypothesis_hits += 1;
    let code = to_graph6(g);
    let oracle = is_pancyclic_brute(g, oracle_budget);
    let cert = certify_with_profile(g, &prof, params);
    if cert.verify(g).is_err() {
        report.invalid_certificates.push(code.clone());
    }
    let mut counter = false;
    for (&ell, ans) in &oracle {
        let certified = cert.cycles.contains_key(&ell);
        match ans {
            OracleAnswer::Unknown => report.oracle_unknown += 1,
            OracleAnswer::None => counter = true,
            OracleAnswer::Found(_) => {}
        }
        if let Some(found) = ans.exists() {
            if found != certified {
                report.disagreements.push(Disagreement {
                    graph6: code.clone(),
                    length: ell,
                    oracle_found: found,
                    certified,
                });
            }
        }
    }
    if counter {
        report.counterexamples.push(code);
    }
    if cert.is_pancyclic() {
        report.complete_certificates += 1;
    }
    for p in cert.provenance.values() {
        let t = report.pipelines.entry(p.pipeline.as_str().to_string()).or_default();
        t.lengths += 1;
        t.fallback += u64::from(p.fallback);
    }
    Ok(())
}

fn scan_all<I>(
    items: I,
    n_range: (usize, usize),
    cfg: &HuntConfig,
    graph: impl Fn(I::Item) -> Graph + Sync + Send,
) -> Result<HuntReport>
where
    I: ParallelIterator,
{
    items
        .fold(
            || Ok(HuntReport::empty(n_range)),
            |acc: Result<HuntReport>, item| {
                let mut acc = acc?;
                scan_graph(&graph(item), &cfg.params, cfg.oracle_budget, &mut acc)?;
                Ok(acc)
            },
        )
        .reduce(|| Ok(HuntReport::empty(n_range)), |a, b| Ok(a?.merge(b?)))
}

pub fn hunt(cfg: &HuntConfig) -> Result<HuntReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    pool.install(|| hunt_in_pool(cfg))
}

fn hunt_in_pool(cfg: &HuntConfig) -> Result<HuntReport> {
    match &cfg.source {
        HuntSource::Internal => {
            if cfg.n_max > MAX_LABELED_N {
                return Err(Error::Precondition(format!(
                    "internal enumeration is limited to n <= {MAX_LABELED_N}; supply a graph6 file"
                )));
            }
            let mut report = HuntReport::empty((3, cfg.n_max));
            for n in 3..=cfg.n_max {
                let part = scan_all((0..labeled_count(n)).into_par_iter(), (3, cfg.n_max), cfg, |m| {
                    graph_from_mask(n, m)
                })?;
                report = report.merge(part);
            }
            Ok(report.finish())
        }
        HuntSource::Graph6(path) => {
            let graphs: Vec<Graph> = read_graph6_file(path)?
                .into_iter()
                .filter(|g| g.n() <= cfg.n_max)
                .collect();
            let lo = graphs.iter().map(Graph::n).min().unwrap_or(0);
            let hi = graphs.iter().map(Graph::n).max().unwrap_or(0);
            let report = scan_all(graphs.par_iter(), (lo, hi), cfg, Graph::clone)?;
            Ok(report.finish())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_is_not_a_hit() {
        let g = Graph::complete_bipartite(3, 3);
        assert!(hypothesis_profile(&g).unwrap().is_none());
        let mut r = HuntReport::empty((6, 6));
        scan_graph(&g, &PipelineParams::default(), ORACLE_BUDGET, &mut r).unwrap();
        assert_eq!((r.graphs_scanned, r.hypothesis_hits), (1, 0));
    }

    #[test]
    fn merge_is_associative() {
        let params = PipelineParams::default();
        let parts: Vec<HuntReport> = [0u64, 500, 1000]
            .iter()
            .map(|&lo| {
                let mut r = HuntReport::empty((5, 5));
                for m in lo..lo + 500 {
                    scan_graph(&graph_from_mask(5, m % 1024), &params, ORACLE_BUDGET, &mut r).unwrap();
                }
                r
            })
            .collect();
        let [a, b, c] = [parts[0].clone(), parts[1].clone(), parts[2].clone()];
        let left = a.clone().merge(b.clone()).merge(c.clone()).finish();
        let right = a.merge(b.merge(c)).finish();
        assert_eq!(left, right);
        assert_eq!(left.graphs_scanned, 1500);
    }

    #[test]
    fn small_exhaustive_hunt_is_clean() {
        let r = hunt(&HuntConfig::internal(6)).unwrap();
        assert!(r.clean(), "{r:?}");
        assert_eq!(r.graphs_scanned, (3..=6).map(labeled_count).sum::<u64>());
        assert_eq!(r.complete_certificates, r.hypothesis_hits);
        assert!(r.hypothesis_hits > 0);
    }
}
