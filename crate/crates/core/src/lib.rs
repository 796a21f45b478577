//! Constructive pancyclicity toolkit: exact graph invariants, cycle
//! rewiring, chorded paths, cycle finders and range pipelines that assemble
//! a verified cycle of every length.

pub mod bitset;
pub mod chorded;
pub mod connectivity;
pub mod cycle;
pub mod error;
pub mod finders;
pub mod graph;
pub mod independence;
pub mod io;
pub mod pipelines;
pub mod rotation;
pub mod search;

pub use bitset::VertexSet;
pub use cycle::{Chord, ChordedPath, Direction, OrientedCycle, Path, Violation};
pub use error::{Error, Result};
pub use graph::{ConditionProfile, Graph};
