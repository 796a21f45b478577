//! Range pipelines: constructions that produce a cycle of a requested length
//! in graphs with connectivity above their independence number, and a
//! certifier that dispatches every length to one of them.

pub mod certify;
pub mod cycle_chords;
pub mod long;
pub mod lower;
pub mod mid_range;
pub mod middle;
pub mod n_over_alpha;
pub mod p5free;
pub mod params;
pub mod provenance;
pub mod remainder;
pub mod shortening;
pub mod upper;

pub use certify::{
    certify_length, certify_pancyclic, certify_with_profile, dispatch_scan, Certificate, DispatchScan, Windows,
};
pub use cycle_chords::{cycle_chords, literal_chords, shorten_cycle_by, strict_chords, CycleChord};
pub use long::{lemma_long, lemma_long_with, LongMove, LongReport};
pub use lower::{lower_range, lower_range_anchor, lower_range_faithful, lower_range_with_profile, AnchorSplice};
pub use mid_range::{mid_range_extend, mid_range_extend_traced, strict_mid_range_window, MidRangeBranch};
pub use middle::{middle_range, middle_range_faithful, middle_range_with_profile};
pub use n_over_alpha::{n_over_alpha_paths, n_over_alpha_paths_with, NOverAlphaBranch, NOverAlphaPaths};
pub use p5free::{extend_keeping_forest, p5free_structure, p5free_structure_within, P5Structure};
pub use params::PipelineParams;
pub use provenance::{fallback_cycle, Pipeline, Provenance, RangeCycle};
pub use remainder::{length3_remainder, length3_remainder_relaxed};
pub use shortening::{shorten_path_indep, shorten_path_mindeg, shorten_path_within};
pub use upper::{upper_range, upper_range_faithful, upper_range_with_profile};
