use crate::error::Result;
use crate::exact::matrix::Vector;
use crate::exact::{GaussianRational, Matrix, Subspace};
use crate::liealg::{bracket_space, center, largest_ideal_in, orthogonal_complement, Subalgebra};

use super::canonical::decompose_j;
use super::classify::{Ledger, LedgerEntry};
use super::structure::{plus_quotient, require_integrable, ComplexStructure};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryVerdict {
    Symmetric,
    NotSymmetric(String),
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub verdict: SymmetryVerdict,
    /// Complex dimension of the commutant of `h` acting on `(g/h)₊`.
    pub commutant_dim: Option<usize>,
    pub checks: Ledger,
}

/// Irreducibility is read off the commutant by Schur's lemma, which relies
/// on `h` acting semisimply; this holds for compact `h`.
pub const SEMISIMPLICITY_ASSUMPTION: &str =
    "the isotropy action is semisimple (h compact), so commutant dimension 1 means irreducible";

/// `dim_C` of the maps on `(g/h)₊` commuting with every `ad̄(x)`, `x ∈ h`.
pub fn isotropy_commutant_dim(j: &ComplexStructure) -> usize {
    let g = j.algebra();
    let v = plus_quotient(j);
    let basis = v.basis_vectors();
    let k = basis.len();
    let actions: Vec<Matrix> = j
        .h()
        .basis_vectors()
        .iter()
        .map(|x| {
            let ad = j.quotient().induced_ad(g, x);
            let cols: Vec<Vector> = basis
                .iter()
                .map(|b| v.coordinates(&ad.mul_vec(b)).expect("(g/h)+ is h-stable"))
                .collect();
            Matrix::from_columns(k, cols)
        })
        .collect();
    // unknown X in row-major order; XA − AX = 0
    let mut rows = Vec::new();
    for a in &actions {
        for r in 0..k {
            for c in 0..k {
                let mut row = vec![GaussianRational::zero(); k * k];
                for t in 0..k {
                    row[r * k + t] += a.get(t, c);
                    row[t * k + c] -= a.get(r, t);
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(k * k, rows).kernel().dim()
}

/// Whether `(g, h, J)` is an irreducible Hermitian symmetric pair.
pub fn is_symmetric_pair(j: &ComplexStructure) -> Result<SymmetryReport> {
    require_integrable(j)?;
    let g = j.algebra();
    let h = j.h();
    let mut checks = Ledger::new();

    let ideal = largest_ideal_in(g, h.space());
    let full = Subalgebra::new(g, Subspace::full(g.dim()))?;
    let z_cap_h = center(g, &full)?.space().intersection(h.space())?;
    checks.push(LedgerEntry::new(
        "no nonzero ideal of g inside h",
        ideal.is_zero(),
        format!("largest ideal has dimension {}", ideal.dim()),
    ));
    checks.push(LedgerEntry::new(
        "h ∩ z(g) = 0",
        z_cap_h.is_zero(),
        format!("dimension {}", z_cap_h.dim()),
    ));
    if !ideal.is_zero() || !z_cap_h.is_zero() {
        return Ok(SymmetryReport {
            verdict: SymmetryVerdict::NotApplicable("ineffective: h contains an ideal of g".into()),
            commutant_dim: None,
            checks,
        });
    }

    let dim = isotropy_commutant_dim(j);
    checks.push(LedgerEntry::new(
        "isotropy irreducible",
        dim == 1,
        format!("commutant dimension {dim}; assumes {SEMISIMPLICITY_ASSUMPTION}"),
    ));
    if dim != 1 {
        let why = if j.dim() == 0 {
            "trivial quotient".to_string()
        } else {
            format!("reducible isotropy: commutant dimension {dim}")
        };
        return Ok(SymmetryReport {
            verdict: SymmetryVerdict::NotApplicable(why),
            commutant_dim: Some(dim),
            checks,
        });
    }

    let dec = decompose_j(j)?;
    let n = dec.parabolic.nilradical.space();
    let m_is_h = dec.m.m.space() == h.space();
    let abelian = bracket_space(g, n, n).is_zero();
    let tn_n = h.space().contains_subspace(&bracket_space(g, &n.conj(), n));
    let perp = orthogonal_complement(g, h.space());
    let theta = h.space().contains_subspace(&bracket_space(g, &perp, &perp))
        && perp.contains_subspace(&bracket_space(g, h.space(), &perp));
    let results = [
        ("m = h", m_is_h),
        ("n abelian", abelian),
        ("[τn, n] ⊆ h_C", tn_n),
        ("θ = id on h, −id on h⊥ is an automorphism", theta),
    ];
    for (name, ok) in results {
        checks.push(LedgerEntry::new(name, ok, ""));
    }
    let verdict = match results.iter().find(|(_, ok)| !ok) {
        None => SymmetryVerdict::Symmetric,
        Some((name, _)) => SymmetryVerdict::NotSymmetric(format!("fails: {name}")),
    };
    Ok(SymmetryReport {
        verdict,
        commutant_dim: Some(dim),
        checks,
    })
}
