//! Where a range cycle came from, and the bounded-search fallback.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cycle::{validate_cycle, OrientedCycle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pipelines::params::PipelineParams;
use crate::search::require_cycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pipeline {
    Hamilton,
    UpperRange,
    MiddleRange,
    LowerRange,
    /// The dense branch whose theorem is not re-proved here.
    ExternalTheorem,
    /// No range window accepts the length.
    WindowGap,
    HypothesisFails,
}

impl Pipeline {
    pub fn as_str(self) -> &'static str {
        match self {
            Pipeline::Hamilton => "hamilton",
            Pipeline::UpperRange => "upper-range",
            Pipeline::MiddleRange => "middle-range",
            Pipeline::LowerRange => "lower-range",
            Pipeline::ExternalTheorem => "external-theorem",
            Pipeline::WindowGap => "window-gap",
            Pipeline::HypothesisFails => "hypothesis-fails",
        }
    }
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub pipeline: Pipeline,
    /// True when bounded search produced the cycle instead of the construction.
    pub fallback: bool,
    /// Construction branch taken, or the error that forced the fallback.
    pub detail: String,
}

impl Provenance {
    pub fn faithful(pipeline: Pipeline, detail: impl Into<String>) -> Self {
        Provenance {
            pipeline,
            fallback: false,
            detail: detail.into(),
        }
    }

    pub fn fallback(pipeline: Pipeline, detail: impl Into<String>) -> Self {
        Provenance {
            pipeline,
            fallback: true,
            detail: detail.into(),
        }
    }
}

/// A cycle of the requested length and how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeCycle {
    pub cycle: OrientedCycle,
    pub provenance: Provenance,
}

/// Validates a constructed cycle of length `ell` and tags it.
pub(crate) fn accept(
    g: &Graph,
    ell: usize,
    cycle: OrientedCycle,
    pipeline: Pipeline,
    detail: &str,
) -> Result<RangeCycle> {
    validate_cycle(g, &cycle).map_err(Error::InvalidCycle)?;
    if cycle.len() != ell {
        return Err(Error::Stall(format!(
            "{pipeline} produced length {} instead of {ell}",
            cycle.len()
        )));
    }
    Ok(RangeCycle {
        cycle,
        provenance: Provenance::faithful(pipeline, detail),
    })
}

/// Bounded exhaustive search for one length, tagged with the reason.
pub fn fallback_cycle(
    g: &Graph,
    ell: usize,
    params: &PipelineParams,
    pipeline: Pipeline,
    reason: &str,
) -> Result<RangeCycle> {
    let cycle = require_cycle(g, ell, params.search_budget)?;
    Ok(RangeCycle {
        cycle,
        provenance: Provenance::fallback(pipeline, reason),
    })
}

/// Runs a construction and falls back to bounded search when it fails.
pub(crate) fn with_fallback(
    g: &Graph,
    ell: usize,
    params: &PipelineParams,
    pipeline: Pipeline,
    run: impl FnOnce() -> Result<RangeCycle>,
) -> Result<RangeCycle> {
    match run() {
        Ok(rc) => Ok(rc),
        Err(e) => fallback_cycle(g, ell, params, pipeline, &e.to_string()),
    }
}
