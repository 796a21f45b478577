//! Oracles, generators, exhaustive hunts and lemma-level test runners for
//! the `pancyclic` crate.

pub mod generate;
pub mod hunt;
pub mod instances;
pub mod oracle;
