//! Constants and budgets shared by the range pipelines.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::independence::DEFAULT_NODE_BUDGET;
use crate::search::DEFAULT_SEARCH_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PipelineParams {
    /// The small constant of the range windows.
    pub delta: f64,
    /// The intermediate constant with `delta < eta < 1`.
    pub eta: f64,
    /// Node budget for every bounded exhaustive cycle search.
    pub search_budget: u64,
    /// Node budget for exact independence computations.
    pub alpha_budget: u64,
    /// Cap on improvement moves, shortening steps and retries.
    pub step_budget: usize,
    /// Seed for randomized sub-steps.
    pub seed: u64,
}

impl Default for PipelineParams {
    fn default() -> Self {
        PipelineParams {
            delta: 0.01,
            eta: 0.1,
            search_budget: DEFAULT_SEARCH_BUDGET,
            alpha_budget: DEFAULT_NODE_BUDGET,
            step_budget: 10_000,
            seed: 0,
        }
    }
}

impl PipelineParams {
    pub fn validate(&self) -> Result<()> {
        if !(0.0 < self.delta && self.delta < self.eta && self.eta < 1.0) {
            return Err(Error::Precondition(format!(
                "need 0 < delta < eta < 1, got delta={} eta={}",
                self.delta, self.eta
            )));
        }
        Ok(())
    }

    /// Both constants in `(0, 1)`, for sub-lemmas run with `delta`
    /// substituted.
    pub fn validate_fractions(&self) -> Result<()> {
        let unit = |x: f64| 0.0 < x && x < 1.0;
        if !(unit(self.delta) && unit(self.eta)) {
            return Err(Error::Precondition(format!(
                "need delta and eta in (0, 1), got delta={} eta={}",
                self.delta, self.eta
            )));
        }
        Ok(())
    }

    /// The same parameters with `delta` replaced, as used when a sub-lemma
    /// runs with the intermediate constant.
    pub fn with_delta(&self, delta: f64) -> Self {
        PipelineParams { delta, ..*self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        PipelineParams::default().validate().unwrap();
        let bad = PipelineParams {
            delta: 0.2,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
