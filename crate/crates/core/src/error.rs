//! Crate-wide error type.
//!
//! Every fallible public operation returns [`Result`]. Variants are coarse on
//! purpose: callers dispatch on the *kind* of failure (bad input, modular
//! characteristic, blown enumeration budget, ...), while the payload carries a
//! human-readable witness for diagnostics.

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed or out-of-range input (non-prime characteristic, empty
    /// sandwich, bad caps, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A multiplication table failed the group axioms; the payload names the
    /// first witness found.
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    /// The characteristic divides the group order, so the group algebra is
    /// not semisimple and the Wedderburn machinery does not apply.
    #[error("characteristic {characteristic} divides group order {order}; group algebra is not semisimple")]
    ModularCase { characteristic: u64, order: usize },

    /// An internal cross-check failed. This always indicates a bug, never bad
    /// user input.
    #[error("internal invariant violation: {0}")]
    InternalInvariantViolation(String),

    /// Matrix or map dimensions are incompatible.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Structure maps fail a required relation (e.g. a module whose
    /// composites do not vanish).
    #[error("relation violation: {0}")]
    RelationViolation(String),

    /// The module lies outside the subcategory the functors are defined on.
    #[error("module not admissible: {0}")]
    NotInModPlus(String),

    /// An enumeration would exceed its configured work budget.
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A union of semigroups with no parts.
    #[error("union must contain at least one part")]
    EmptyUnion,

    /// A valued graph whose edge values violate the weighting symmetry.
    #[error("valued graph symmetry violation: {0}")]
    SymmetryViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
