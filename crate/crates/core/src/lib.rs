//! Exact branching of discrete series representations to symmetric
//! subgroups.
//!
//! The main route computes multiplicities through the duality between the
//! restriction to `H` and the restriction of an associated representation of
//! the dual group `H₀`: a compact branching problem followed by Blattner's
//! formula. An independent route evaluates a partition-function formula
//! directly. Both run in exact rational arithmetic.

pub mod branching;
pub mod catalog;
pub mod distribution;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod partition;
pub mod rational;
pub mod report;
pub mod roots;
pub mod weight;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::Rat;
pub use weight::{Basis, Weight};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/weights.md")]
    mod weights {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/duality.md")]
    mod duality {}
    #[doc = include_str!("../../../book/src/duflo_vargas.md")]
    mod duflo_vargas {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
