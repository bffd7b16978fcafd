//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The quiver is Dynkin (positive definite Tits form) or wild (indefinite).
    #[error("not an affine quiver: {0}")]
    NotAffine(String),

    /// Exchange division left a nontrivial denominator polynomial. Mutation of
    /// honest seeds can never produce this; it signals an implementation bug.
    #[error("mutation produced a non-Laurent division")]
    NonLaurentDivision,

    /// Enumeration hit the configured node cap.
    #[error("seed enumeration exceeded the node cap of {0}")]
    BudgetExceeded(usize),

    /// Tube-local Hom requested for objects of different tubes.
    #[error("objects lie in different tubes")]
    DifferentTubes,

    /// Operation requires a module, e.g. a dimension vector of a shifted projective.
    #[error("object is not a module: {0}")]
    NotAModule(String),

    /// Object of maximal quasilength in its tube, or larger.
    #[error("object is not exceptional: {0}")]
    NotExceptional(String),

    /// No object matched a denominator vector inside the scan window.
    #[error("no object matches denominator vector {0} within the scan window")]
    Unidentifiable(String),

    /// The random-representation oracle could not produce rigid representatives.
    #[error("hom oracle unstable: {0}")]
    OracleUnstable(String),

    /// Denominator prediction requested for an object of the initial cluster itself.
    #[error(
        "object coincides with cluster object at position {0}; its variable is the initial one"
    )]
    ExcludedObject(usize),

    /// Malformed input: quiver files, object coordinates, option values.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A structural invariant failed; indicates a bug, never user error.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
