use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exact::matrix::{add_vectors, scale_vector, Vector};
use crate::exact::{GaussianRational, Matrix, Subspace};
use crate::liealg::{
    bracket_space, center, centralizer, extend_to_maximal_abelian, is_nilpotent, LieAlgebra, Subalgebra,
};

use super::datum::{geometric_coefficients, root_decomposition, RootDatum};

/// `p = m_C ⊕ n` with `n` the sum of the root spaces in `positive_set`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parabolic {
    pub levi_real: Subalgebra,
    pub positive_set: Vec<usize>,
    pub nilradical: Subalgebra,
    pub space: Subalgebra,
}

impl Parabolic {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Roots of `g_C` split relative to a Levi subalgebra `m ⊇ a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviSplit {
    /// Roots vanishing on the center of `m`; their spaces lie in `m_C`.
    pub levi_roots: Vec<usize>,
    /// The remaining roots `Q`.
    pub complement_roots: Vec<usize>,
}

/// Splits the roots by whether they vanish on `center(m)` and checks that
/// `m_C = zero_space ⊕ ⊕ g_α` over the vanishing ones.
pub fn levi_split(g: &LieAlgebra, rd: &RootDatum, m: &Subalgebra) -> Result<LeviSplit> {
    if !m.space().contains_subspace(rd.cartan.space()) {
        return Err(Error::LeviMismatch(
            "m does not contain the Cartan subalgebra".into(),
        ));
    }
    let z = center(g, m)?.basis_vectors();
    let mut levi_roots = Vec::new();
    let mut complement_roots = Vec::new();
    for idx in 0..rd.roots.len() {
        let mut vanishes = true;
        for v in &z {
            let value = rd.evaluate(idx, v).ok_or_else(|| {
                Error::LeviMismatch("center of m is not inside the Cartan subalgebra".into())
            })?;
            if !value.is_zero() {
                vanishes = false;
                break;
            }
        }
        if vanishes {
            levi_roots.push(idx);
        } else {
            complement_roots.push(idx);
        }
    }
    let expected = rd.zero_space.sum(&rd.root_span(&levi_roots))?;
    if &expected != m.space() {
        return Err(Error::LeviMismatch(format!(
            "m has dimension {} but its root data span {}",
            m.dim(),
            expected.dim()
        )));
    }
    Ok(LeviSplit {
        levi_roots,
        complement_roots,
    })
}

/// Whether `set` is closed under adding roots of `set ∪ extra` (sums that are roots).
fn closed_under(rd: &RootDatum, set: &BTreeSet<usize>, extra: &[usize]) -> bool {
    set.iter().all(|&a| {
        set.iter().chain(extra).all(|&b| match rd.sum(a, b) {
            Some(c) => set.contains(&c),
            None => true,
        })
    })
}

/// Sign choices over `±` pairs; bit `j` of `mask` picks the negative of pair `j`.
fn signed(rd: &RootDatum, reps: &[usize], mask: u64) -> BTreeSet<usize> {
    reps.iter()
        .enumerate()
        .map(|(j, &r)| if mask >> j & 1 == 1 { rd.negative(r) } else { r })
        .collect()
}

const MAX_PAIRS: usize = 24;

fn masks(pairs: usize) -> Result<std::ops::Range<u64>> {
    if pairs > MAX_PAIRS {
        return Err(Error::InvalidSpec(format!(
            "{pairs} root pairs exceed the enumeration limit of {MAX_PAIRS}"
        )));
    }
    Ok(0..1u64 << pairs)
}

/// All `Q⁺ ⊂ Q` with `Q = Q⁺ ⊔ −Q⁺` that are closed under addition of roots
/// from `Q⁺` and from `m`. Ordered by sign mask over the lexicographically
/// positive representatives; each system is a sorted list of root indices.
pub fn enumerate_positive_systems(g: &LieAlgebra, rd: &RootDatum, m: &Subalgebra) -> Result<Vec<Vec<usize>>> {
    let split = levi_split(g, rd, m)?;
    let reps = rd.positive_representatives(&split.complement_roots);
    let mut out = Vec::new();
    for mask in masks(reps.len())? {
        let set = signed(rd, &reps, mask);
        if closed_under(rd, &set, &split.levi_roots) {
            out.push(set.into_iter().collect());
        }
    }
    Ok(out)
}

fn failure(msg: impl Into<String>) -> Error {
    Error::ClosureFailure(msg.into())
}

/// A Borel subalgebra inside `p`: `zero_space`, `Q⁺` and a closed choice of
/// signs on the Levi roots.
fn find_borel(
    g: &LieAlgebra,
    rd: &RootDatum,
    split: &LeviSplit,
    q_plus: &BTreeSet<usize>,
) -> Result<Subspace> {
    let reps = rd.positive_representatives(&split.levi_roots);
    for mask in masks(reps.len())? {
        let mut set = signed(rd, &reps, mask);
        set.extend(q_plus.iter().copied());
        if closed_under(rd, &set, &[]) {
            let idx: Vec<usize> = set.into_iter().collect();
            let b = rd.zero_space.sum(&rd.root_span(&idx))?;
            if Subalgebra::new(g, b.clone()).is_ok() {
                return Ok(b);
            }
        }
    }
    Err(failure("no Borel subalgebra inside p"))
}

/// `{x ∈ p : B(x, p) = 0}` for the invariant inner product `B`.
pub fn pairing_radical(g: &LieAlgebra, p: &Subspace) -> Result<Subspace> {
    let n = g.dim();
    let rows: Vec<Vector> = p
        .basis_vectors()
        .iter()
        .map(|y| g.inner_product().mul_vec(y))
        .collect();
    let perp = if rows.is_empty() {
        Subspace::full(n)
    } else {
        Matrix::from_rows(n, rows).kernel()
    };
    p.intersection(&perp)
}

/// Builds and validates `p = m_C ⊕ ⊕_{α∈Q⁺} g_α`.
pub fn build_parabolic(
    g: &LieAlgebra,
    rd: &RootDatum,
    m: &Subalgebra,
    q_plus: &[usize],
) -> Result<Parabolic> {
    let split = levi_split(g, rd, m)?;
    let set: BTreeSet<usize> = q_plus.iter().copied().collect();
    if set.len() != q_plus.len() || q_plus.iter().any(|i| !split.complement_roots.contains(i)) {
        return Err(failure("Q⁺ must be distinct roots outside the Levi factor"));
    }
    if 2 * set.len() != split.complement_roots.len() || set.iter().any(|&a| set.contains(&rd.negative(a))) {
        return Err(failure("Q⁺ is not one root from each ± pair"));
    }
    if !closed_under(rd, &set, &split.levi_roots) {
        return Err(failure("Q⁺ is not closed under root addition"));
    }

    let q: Vec<usize> = set.iter().copied().collect();
    let n_space = rd.root_span(&q);
    let p_space = m.space().sum(&n_space)?;
    let space = Subalgebra::new(g, p_space.clone()).map_err(|_| failure("p is not closed"))?;
    let nilradical = Subalgebra::new(g, n_space.clone()).map_err(|_| failure("n is not closed"))?;

    find_borel(g, rd, &split, &set)?;
    if &p_space.real_points() != m.space() {
        return Err(failure("p ∩ g differs from m"));
    }
    if &p_space.intersection(&p_space.conj())? != m.space() {
        return Err(failure("p ∩ τ(p) differs from m_C"));
    }
    if !n_space.contains_subspace(&bracket_space(g, &p_space, &n_space)) {
        return Err(failure("[p, n] is not inside n"));
    }
    if !is_nilpotent(g, &nilradical)? {
        return Err(failure("n is not nilpotent"));
    }
    if pairing_radical(g, &p_space)? != n_space {
        return Err(failure("n differs from the radical of the pairing on p"));
    }
    Ok(Parabolic {
        levi_real: m.clone(),
        positive_set: q,
        nilradical,
        space,
    })
}

/// `Q⁺ = {α : α(i·t₀) > 0}` for the first `t₀ = Σ k^j t_j` on which no root
/// of `Q` vanishes.
pub fn positive_set_from_abelian(
    g: &LieAlgebra,
    rd: &RootDatum,
    t: &Subalgebra,
    split: &LeviSplit,
) -> Result<Vec<usize>> {
    if split.complement_roots.is_empty() {
        return Ok(Vec::new());
    }
    let basis = t.basis_vectors();
    for coeffs in geometric_coefficients(basis.len()).take(4096) {
        let mut t0 = vec![GaussianRational::zero(); g.dim()];
        for (c, b) in coeffs.iter().zip(&basis) {
            t0 = add_vectors(&t0, &scale_vector(&GaussianRational::from_int(*c), b));
        }
        let values: Vec<GaussianRational> = split
            .complement_roots
            .iter()
            .map(|&i| rd.evaluate(i, &t0).expect("t lies in the Cartan subalgebra"))
            .collect();
        if values.iter().all(|v| !v.is_zero()) {
            // α(i·t₀) = i·α(t₀) = −Im α(t₀)
            return Ok(split
                .complement_roots
                .iter()
                .zip(&values)
                .filter(|(_, v)| v.im() < &num_traits::Zero::zero())
                .map(|(&i, _)| i)
                .collect());
        }
    }
    Err(failure("no element of t separates the roots"))
}

/// The parabolic subalgebra with Levi factor `C_g(t)` picked out by `t`.
pub fn parabolic_from_abelian(g: &LieAlgebra, t: &Subalgebra) -> Result<Parabolic> {
    if !t.is_abelian(g) {
        return Err(Error::NotAbelian);
    }
    let m = centralizer(g, t.space());
    let a = extend_to_maximal_abelian(g, t)?;
    let rd = root_decomposition(g, &a)?;
    let split = levi_split(g, &rd, &m)?;
    let q_plus = positive_set_from_abelian(g, &rd, t, &split)?;
    build_parabolic(g, &rd, &m, &q_plus)
}
