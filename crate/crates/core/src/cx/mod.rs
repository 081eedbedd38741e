//! Invariant complex structures on `g/h`: the Nijenhuis tensor, integrability,
//! the canonical subalgebra `m`, the correspondence `J ↔ (p, J₁)`,
//! classification and Hermitian-symmetric detection.

mod canonical;
mod classify;
mod structure;
mod symmetric;
mod trials;

pub use canonical::{cartan_for_levi, compute_m, construct_j, decompose_j, Decomposition, MData};
pub use classify::{
    all_passed, candidate_levi, classify, verify_structure, ClassificationReport, Ledger, LedgerEntry, Reason,
};
pub use structure::{
    integrable_by_closure, integrable_by_tensor, is_integrable, is_invariant, nijenhuis, nijenhuis_lifted,
    plus_quotient, plus_space, standard_pairing, ComplexStructure, TorusComplexStructure,
};
pub use symmetric::{
    is_symmetric_pair, isotropy_commutant_dim, SymmetryReport, SymmetryVerdict, SEMISIMPLICITY_ASSUMPTION,
};
pub use trials::{nijenhuis_trials, random_h_element, random_rational, NijenhuisTrials};
