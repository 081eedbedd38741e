//! Exact construction, classification and verification of invariant
//! integrable complex structures on quotients `g/h` of compact Lie algebras.
//!
//! Everything is computed over the rationals and Gaussian rationals; no
//! floating point is used anywhere.

pub mod catalog;
pub mod cli;
pub mod cx;
pub mod error;
pub mod exact;
pub mod liealg;
pub mod roots;

pub use error::{Error, Result};
