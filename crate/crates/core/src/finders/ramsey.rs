//! Cycle-complete Ramsey thresholds and the matching cycle-or-independent-set
//! search.

use serde::{Deserialize, Serialize};

use crate::cycle::OrientedCycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::max_independent_set_with_budget;
use crate::search::{find_cycle, SearchOutcome};

/// Integer `r` with `r^x == s`, if any.
fn exact_root(s: usize, x: u32) -> Option<usize> {
    let guess = (s as f64).powf(1.0 / x as f64).round() as usize;
    (guess.saturating_sub(1)..=guess + 1).find(|&r| r.checked_pow(x) == Some(s))
}

/// `⌈((ℓ−2)(s^{1/x} + 2) + 1)(s − 1)⌉` with `x = ⌊(ℓ−1)/2⌋`.
pub fn ramsey_bound_erdos(ell: usize, s: usize) -> Result<usize> {
    if ell < 3 || s < 2 {
        return Err(Error::Precondition(format!(
            "need ell >= 3 and s >= 2, got ({ell}, {s})"
        )));
    }
    let x = ((ell - 1) / 2) as u32;
    if let Some(r) = exact_root(s, x) {
        return Ok(((ell - 2) * (r + 2) + 1) * (s - 1));
    }
    let root = (s as f64).powf(1.0 / x as f64);
    Ok((((ell - 2) as f64 * (root + 2.0) + 1.0) * (s - 1) as f64).ceil() as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeevashBound {
    pub value: usize,
    /// `s >= 3` and `ℓ >= ln s / ln ln s` (constant taken as 1).
    pub in_regime: bool,
}

/// `(ℓ − 1)(s − 1) + 1`, tagged with whether the exact value is known to hold.
pub fn ramsey_bound_keevash(ell: usize, s: usize) -> KeevashBound {
    let value = ell.saturating_sub(1) * s.saturating_sub(1) + 1;
    let in_regime = s >= 3 && {
        let ls = (s as f64).ln();
        let lls = ls.ln();
        lls > 0.0 && ell as f64 >= ls / lls
    };
    KeevashBound { value, in_regime }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleOrIndependent {
    Cycle(OrientedCycle),
    IndependentSet(Vec<usize>),
    Neither,
}

/// A cycle of length `ell` or an independent set of size `s`, whichever
/// exists; `Neither` only when both searches complete without one.
pub fn find_cycle_or_independent_set(g: &Graph, ell: usize, s: usize, budget: u64) -> Result<CycleOrIndependent> {
    match find_cycle(g, ell, budget) {
        SearchOutcome::Found(c) => return Ok(CycleOrIndependent::Cycle(c)),
        SearchOutcome::Unknown => {
            return Err(Error::BudgetExceeded {
                what: "cycle search",
                budget,
            })
        }
        SearchOutcome::Absent => {}
    }
    let ind = max_independent_set_with_budget(g, &g.all_vertices(), budget)?;
    if ind.len() >= s {
        Ok(CycleOrIndependent::IndependentSet(ind.iter().take(s).collect()))
    } else {
        Ok(CycleOrIndependent::Neither)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::is_independent;

    #[test]
    fn formula_values() {
        assert_eq!(ramsey_bound_erdos(5, 3).unwrap(), 25);
        assert_eq!(ramsey_bound_erdos(3, 2).unwrap(), 5);
        assert_eq!(ramsey_bound_erdos(5, 4).unwrap(), 39);
        assert!(ramsey_bound_erdos(2, 3).is_err());
        assert_eq!(ramsey_bound_keevash(5, 4).value, 13);
        assert_eq!(ramsey_bound_keevash(3, 3).value, 5);
        let deg = ramsey_bound_keevash(7, 2);
        assert_eq!(deg.value, 7);
        assert!(!deg.in_regime);
        assert!(ramsey_bound_keevash(40, 50).in_regime);
    }

    #[test]
    fn searches() {
        let k = Graph::complete(13);
        assert!(matches!(
            find_cycle_or_independent_set(&k, 5, 4, 1_000_000).unwrap(),
            CycleOrIndependent::Cycle(c) if c.len() == 5
        ));
        let e = Graph::empty(13);
        match find_cycle_or_independent_set(&e, 5, 4, 1_000_000).unwrap() {
            CycleOrIndependent::IndependentSet(s) => {
                assert_eq!(s.len(), 4);
                assert!(is_independent(&e, &e.vertex_set(s)));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            find_cycle_or_independent_set(&Graph::cycle(6), 5, 4, 1_000_000).unwrap(),
            CycleOrIndependent::Neither
        );
    }
}
