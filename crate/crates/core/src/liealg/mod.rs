//! Lie algebras by structure constants, subalgebras, quotients and the
//! standard constructions on them.

mod algebra;
mod constructions;
mod quotient;
mod subalgebra;

pub(crate) use algebra::first_nonpositive_pivot;
pub use algebra::{Field, LieAlgebra, ValidationFailure};
pub use constructions::{
    bracket_space, center, centralizer, derived, derived_series, extend_to_maximal_abelian,
    extend_to_maximal_abelian_within, is_nilpotent, is_solvable, killing_within, largest_ideal_in,
    lower_central_series, normalizer, normalizer_of_space, orthogonal_complement, radical, restricted_ad,
};
pub use quotient::Quotient;
pub use subalgebra::Subalgebra;
