//! Explicit finders for short cycles and the structures the lower range is
//! built from.

pub mod even_cycle;
pub mod odd_anchor;
pub mod ramsey;
pub mod short_cycles;

pub use even_cycle::{even_cycle_threshold, find_even_cycle};
pub use odd_anchor::{odd_anchor_subgraph, OddAnchorSubgraph};
pub use ramsey::{find_cycle_or_independent_set, ramsey_bound_erdos, ramsey_bound_keevash, CycleOrIndependent};
pub use short_cycles::{find_short_cycle, ShortCycle, ShortCycleRoute};
