use crate::error::{Error, Result};
use crate::exact::matrix::Vector;
use crate::exact::{GaussianRational, Matrix, Subspace};
use crate::liealg::{
    center, centralizer, derived, extend_to_maximal_abelian, normalizer, normalizer_of_space, LieAlgebra,
    Quotient, Subalgebra,
};
use crate::roots::{
    build_parabolic, enumerate_positive_systems, pairing_radical, root_decomposition, Parabolic, RootDatum,
};

use super::structure::{
    is_integrable, plus_space, require_integrable, ComplexStructure, TorusComplexStructure,
};

/// The canonical subalgebra `m ⊇ h` attached to an integrable `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MData {
    pub m: Subalgebra,
    /// Complement of `h` in `m`, spanned by the non-pivot axes of `h`.
    pub u: Subspace,
    pub center_m: Subalgebra,
}

fn violation(msg: impl Into<String>) -> Error {
    Error::TheoremViolation(msg.into())
}

/// Checks `h ⊆ m`, `[m,m] = [h,h]` and `m = C_g(z(m))`, and splits off `u`.
pub(crate) fn levi_data(g: &LieAlgebra, h: &Subalgebra, m: Subalgebra) -> Result<MData> {
    if !m.space().contains_subspace(h.space()) {
        return Err(violation("h is not contained in m"));
    }
    if derived(g, &m)?.space() != derived(g, h)?.space() {
        return Err(violation("[m, m] differs from [h, h]"));
    }
    let center_m = center(g, &m)?;
    if centralizer(g, center_m.space()).space() != m.space() {
        return Err(violation("m is not the centralizer of its center"));
    }
    let u = m
        .space()
        .intersection(&Subspace::coordinate(g.dim(), &h.space().free_axes()))?;
    if u.dim() + h.dim() != m.dim() {
        return Err(violation("m does not split as u ⊕ h"));
    }
    Ok(MData { m, u, center_m })
}

/// `m = {x ∈ N_g(h) : [ad̄(x), J] = 0}`.
pub fn compute_m(j: &ComplexStructure) -> Result<MData> {
    require_integrable(j)?;
    let g = j.algebra();
    let q = j.quotient();
    let nh = normalizer(g, j.h());
    let basis = nh.basis_vectors();
    let d = j.dim();
    let m_space = if d == 0 {
        nh.space().clone()
    } else {
        let cols: Vec<Vector> = basis
            .iter()
            .map(|b| {
                let c = q.induced_ad(g, b).commutator(j.matrix());
                (0..d * d).map(|k| c.get(k / d, k % d).clone()).collect()
            })
            .collect();
        let kernel = Matrix::from_columns(d * d, cols).kernel();
        let vs: Vec<Vector> = kernel
            .basis_vectors()
            .iter()
            .map(|c| Matrix::from_columns(g.dim(), basis.clone()).mul_vec(c))
            .collect();
        Subspace::from_vectors(g.dim(), &vs)
    };
    let m = Subalgebra::new(g, m_space).map_err(|_| violation("m is not a subalgebra"))?;
    levi_data(g, j.h(), m)
}

/// The catalog's maximal torus, when the algebra came from the catalog.
pub(crate) fn preferred_torus(g: &LieAlgebra) -> Option<Subspace> {
    g.catalog_spec()
        .map(|s| Subspace::coordinate(g.dim(), &s.torus_axes()))
}

/// Deterministic Cartan subalgebra of `g` inside the Levi factor `m`: the
/// center of `m` plus the part of the catalog torus centralizing it, extended
/// greedily.
pub fn cartan_for_levi(g: &LieAlgebra, m: &Subalgebra) -> Result<Subalgebra> {
    let z = center(g, m)?;
    let mut seed = z.space().clone();
    if let Some(t) = preferred_torus(g) {
        let part = t.intersection(centralizer(g, z.space()).space())?;
        seed = seed.sum(&part)?;
    }
    let seed = Subalgebra::new(g, seed)?;
    extend_to_maximal_abelian(g, &seed)
}

/// `J(p, J₁)`: the structure whose `+i` eigenspace is `p((m/h)₊) ⊕ p(n)`.
pub fn construct_j<'g>(
    g: &'g LieAlgebra,
    h: &Subalgebra,
    p: &Parabolic,
    j1: &TorusComplexStructure,
) -> Result<ComplexStructure<'g>> {
    let m = &p.levi_real;
    if !m.space().contains_subspace(h.space()) {
        return Err(Error::LeviMismatch(
            "h is not contained in the Levi factor".into(),
        ));
    }
    if derived(g, m)?.space() != derived(g, h)?.space() {
        return Err(Error::LeviMismatch("[m, m] differs from [h, h]".into()));
    }
    if j1.m.space() != m.space() {
        return Err(Error::LeviMismatch("J1 is defined on a different fiber".into()));
    }
    let q = Quotient::new(g, h)?;
    let fiber = TorusComplexStructure::fiber_space(g, h, m)?;
    if fiber.dim() % 2 == 1 {
        return Err(Error::OddFiber(fiber.dim()));
    }
    if j1.fiber != fiber {
        return Err(Error::LeviMismatch("J1 fiber does not match p(m)".into()));
    }

    let d = q.dim();
    let v_plus = j1.plus_space().sum(&q.project_space(p.nilradical.space()))?;
    if 2 * v_plus.dim() != d {
        return Err(violation(format!(
            "(g/h)+ has dimension {} in a quotient of dimension {d}",
            v_plus.dim()
        )));
    }
    let plus = v_plus.basis_vectors();
    let mut cols = plus.clone();
    cols.extend(plus.iter().map(|v| crate::exact::matrix::conj_vector(v)));
    let b = Matrix::from_columns(d, cols);
    let b_inv = b
        .inverse()
        .ok_or_else(|| violation("(g/h)+ meets its conjugate"))?;
    let k = d / 2;
    let diag: Vec<GaussianRational> = (0..d)
        .map(|r| {
            if r < k {
                GaussianRational::i()
            } else {
                -GaussianRational::i()
            }
        })
        .collect();
    let j = b.mul(&Matrix::diagonal(&diag)).mul(&b_inv);
    if !j.is_real() {
        return Err(violation("constructed J is not real"));
    }
    let out = ComplexStructure::on(g, q, j)?;
    if !super::structure::is_invariant(&out) {
        return Err(violation("constructed J is not h-invariant"));
    }
    if !is_integrable(&out)? {
        return Err(violation("constructed J is not integrable"));
    }
    Ok(out)
}

/// `(p, J₁)` recovered from an integrable invariant `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub m: MData,
    pub datum: RootDatum,
    pub parabolic: Parabolic,
    /// Position of `p` among [`enumerate_positive_systems`] for `m`.
    pub parabolic_index: usize,
    pub torus: TorusComplexStructure,
}

pub fn decompose_j(j: &ComplexStructure) -> Result<Decomposition> {
    require_integrable(j)?;
    let g = j.algebra();
    let h = j.h();
    let l = plus_space(j)?;
    let p_space = normalizer_of_space(g, &l).into_space();

    let md = compute_m(j)?;
    if &p_space.real_points() != md.m.space() {
        return Err(violation("p ∩ g differs from m"));
    }
    let cartan = cartan_for_levi(g, &md.m)?;
    let datum = root_decomposition(g, &cartan)?;
    let n = pairing_radical(g, &p_space)?;
    let q_plus: Vec<usize> = (0..datum.roots.len())
        .filter(|&i| n.contains_subspace(&datum.roots[i].space))
        .collect();
    let parabolic = build_parabolic(g, &datum, &md.m, &q_plus)
        .map_err(|e| violation(format!("normalizer of l is not a parabolic: {e}")))?;
    if parabolic.space.space() != &p_space {
        return Err(violation(
            "root construction of p differs from the normalizer of l",
        ));
    }
    if parabolic.nilradical.space() != &n {
        return Err(violation(
            "root construction of n differs from the pairing radical",
        ));
    }
    let parabolic_index = enumerate_positive_systems(g, &datum, &md.m)?
        .iter()
        .position(|s| s == &q_plus)
        .ok_or_else(|| violation("Q+ is missing from the positive-system enumeration"))?;

    let fiber = TorusComplexStructure::fiber_space(g, h, &md.m)?;
    let cols = fiber
        .basis_vectors()
        .iter()
        .map(|w| {
            fiber
                .coordinates(&j.apply(w))
                .ok_or_else(|| violation("J does not preserve m/h"))
        })
        .collect::<Result<Vec<_>>>()?;
    let j1 = Matrix::from_columns(fiber.dim(), cols);
    let torus = TorusComplexStructure::new(g, h, &md.m, j1)?;
    Ok(Decomposition {
        m: md,
        datum,
        parabolic,
        parabolic_index,
        torus,
    })
}
