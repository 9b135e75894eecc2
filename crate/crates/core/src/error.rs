//! Error type shared by every module.

use thiserror::Error;

/// Everything that can go wrong in branchkit.
///
/// Input errors (bad text, bad parameters, unknown pairs) are distinguished
/// from internal consistency failures by [`Error::is_consistency_failure`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input.
    #[error("parse error: {0}")]
    Parse(String),

    /// A division by zero in exact arithmetic.
    #[error("division by zero")]
    DivisionByZero,

    /// Two weights from different coordinate systems were combined.
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(String, String),

    /// A weight outside the span of the roots.
    #[error("weight {0} does not lie in the span of the roots of {1}")]
    NotInSpan(String, String),

    /// A parameter orthogonal to some root.
    #[error("parameter is singular: {0} is orthogonal to the root {1}")]
    Singular(String, String),

    /// A parameter failing the integrality test.
    #[error("parameter is not integral: {0}")]
    NonIntegral(String),

    /// A parameter that is not dominant for the fixed compact positive system.
    #[error("parameter is not dominant for the compact positive system: {0}")]
    NotDominant(String),

    /// A chamber outside the admissible family of the pair.
    #[error("chamber is not admissible for {pair}: {detail}")]
    NotAdmissible { pair: String, detail: String },

    /// A pair that does not match any catalog row.
    #[error("unknown pair: {0}")]
    UnknownPair(String),

    /// A catalog row that is listed but cannot be computed with.
    #[error("pair listed but unimplemented: {reason}")]
    Unimplemented { pair: String, reason: String },

    /// A Weyl group larger than the configured ceiling.
    #[error("Weyl group of order {order} exceeds the ceiling {ceiling}")]
    WeylCeiling { order: usize, ceiling: usize },

    /// Partition generators without a common positive functional.
    #[error("generators are not acyclic for the functional: {0}")]
    Acyclic(String),

    /// A window whose functional is not positive on some generator.
    #[error("window incompatible with generator {0}")]
    WindowIncompatible(String),

    /// A convolution whose exact region is empty.
    #[error("window underflow: no weight is exact after convolution")]
    WindowUnderflow,

    /// A weight that cannot be placed on the integer lattice of a frame.
    #[error("weight {0} is not on the lattice with denominator {1}")]
    Denominator(String, i64),

    /// Heights that do not produce a dominant parameter.
    #[error("heights insufficient: {0}")]
    HeightsInsufficient(String),

    /// A malformed catalog file.
    #[error("catalog error: {0}")]
    Catalog(String),

    /// A multiplicity formula produced a negative value.
    #[error("negative multiplicity {value} at {at}")]
    NegativeMultiplicity { at: String, value: i128 },

    /// An internal identity that should hold did not.
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// True for failures that signal a bug or a disagreement rather than bad
    /// input; the CLI maps these to exit code 2.
    pub fn is_consistency_failure(&self) -> bool {
        matches!(
            self,
            Error::NegativeMultiplicity { .. } | Error::Consistency(_)
        )
    }
}

/// Result alias.
pub type Result<T> = std::result::Result<T, Error>;
