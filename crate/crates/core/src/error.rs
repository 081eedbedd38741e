use thiserror::Error;

/// Errors raised by the exact algebra, Lie-theoretic and complex-structure layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("spectrum is not rational: found {found} rational eigenvalues out of {dim}")]
    IrrationalSpectrum { found: usize, dim: usize },

    #[error("subspace is not closed under the bracket: {0}")]
    NotClosed(String),

    #[error("algebra is already complexified")]
    AlreadyComplex,

    #[error("subalgebra is not abelian")]
    NotAbelian,

    #[error("subalgebra is not self-centralizing (not a Cartan subalgebra)")]
    NotCartan,

    #[error("Cartan subalgebra does not act semisimply: {0}")]
    NonSemisimpleAction(String),

    #[error("Levi subalgebra mismatch: {0}")]
    LeviMismatch(String),

    #[error("parabolic validation failed: {0}")]
    ClosureFailure(String),

    #[error("complex structure is not invariant under the isotropy action: {0}")]
    NotInvariant(String),

    #[error("fiber m/h has odd dimension {0}")]
    OddFiber(usize),

    #[error("not a complex structure: {0}")]
    NotComplexStructure(String),

    #[error("theorem check failed: {0}")]
    TheoremViolation(String),

    #[error("invalid algebra specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
