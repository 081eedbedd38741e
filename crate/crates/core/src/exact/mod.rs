//! Exact scalar, matrix and subspace arithmetic over `Q` and `Q(i)`.

pub mod eigen;
pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use eigen::{char_poly, rational_eigenvalues};
pub use matrix::{Matrix, Rref, Vector};
pub use scalar::{format_rational, parse_rational, GaussianRational, Rational};
pub use subspace::Subspace;
