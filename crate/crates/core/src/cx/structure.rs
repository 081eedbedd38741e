use crate::error::{Error, Result};
use crate::exact::matrix::{add_vectors, is_zero_vector, sub_vectors, Vector};
use crate::exact::{GaussianRational, Matrix, Subspace};
use crate::liealg::{LieAlgebra, Quotient, Subalgebra};

/// A real linear map `J` on `g/h` with `J² = −1`, in quotient coordinates.
#[derive(Debug, Clone)]
pub struct ComplexStructure<'g> {
    g: &'g LieAlgebra,
    quotient: Quotient,
    j: Matrix,
    invariant: bool,
}

fn check_square_minus_one(j: &Matrix, dim: usize, what: &str) -> Result<()> {
    if j.rows() != dim || j.cols() != dim {
        return Err(Error::NotComplexStructure(format!(
            "{what} must be {dim}x{dim}, got {}x{}",
            j.rows(),
            j.cols()
        )));
    }
    if !j.is_real() {
        return Err(Error::NotComplexStructure(format!("{what} has non-real entries")));
    }
    if j.mul(j) != Matrix::identity(dim).scale(&-GaussianRational::one()) {
        return Err(Error::NotComplexStructure(format!(
            "{what} does not square to -1"
        )));
    }
    Ok(())
}

impl<'g> ComplexStructure<'g> {
    pub fn new(g: &'g LieAlgebra, h: &Subalgebra, j: Matrix) -> Result<Self> {
        let quotient = Quotient::new(g, h)?;
        Self::on(g, quotient, j)
    }

    pub fn on(g: &'g LieAlgebra, quotient: Quotient, j: Matrix) -> Result<Self> {
        check_square_minus_one(&j, quotient.dim(), "J")?;
        let invariant = quotient
            .h()
            .basis_vectors()
            .iter()
            .all(|x| quotient.induced_ad(g, x).commutator(&j).is_zero());
        Ok(Self {
            g,
            quotient,
            j,
            invariant,
        })
    }

    pub fn algebra(&self) -> &'g LieAlgebra {
        self.g
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    pub fn h(&self) -> &Subalgebra {
        self.quotient.h()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn apply(&self, u: &[GaussianRational]) -> Vector {
        self.j.mul_vec(u)
    }

    pub(crate) fn require_invariant(&self) -> Result<()> {
        if self.invariant {
            Ok(())
        } else {
            Err(Error::NotInvariant(
                "[J, ad(x)] is nonzero for some x in h".into(),
            ))
        }
    }
}

/// `[J, ad̄(x)] = 0` for every basis vector `x` of `h`.
pub fn is_invariant(j: &ComplexStructure) -> bool {
    j.invariant
}

/// Nijenhuis tensor on explicit lifts `x, y` of `u, v` and `x', y'` of `Ju, Jv`.
pub fn nijenhuis_lifted(
    j: &ComplexStructure,
    x: &[GaussianRational],
    y: &[GaussianRational],
    xp: &[GaussianRational],
    yp: &[GaussianRational],
) -> Result<Vector> {
    j.require_invariant()?;
    let g = j.g;
    let q = &j.quotient;
    let p = |a: &[GaussianRational], b: &[GaussianRational]| q.project(&g.bracket(a, b));
    let cross = add_vectors(&p(xp, y), &p(x, yp));
    Ok(sub_vectors(&add_vectors(&p(x, y), &j.apply(&cross)), &p(xp, yp)))
}

/// `N(u, v) = p[x,y] + J(p[x',y] + p[x,y']) − p[x',y']` with section lifts.
pub fn nijenhuis(j: &ComplexStructure, u: &[GaussianRational], v: &[GaussianRational]) -> Result<Vector> {
    let d = j.dim();
    for w in [u, v] {
        if w.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: w.len(),
            });
        }
    }
    let q = &j.quotient;
    nijenhuis_lifted(
        j,
        &q.lift(u),
        &q.lift(v),
        &q.lift(&j.apply(u)),
        &q.lift(&j.apply(v)),
    )
}

/// `(g/h)₊ = ker(J − i)` in complexified quotient coordinates.
pub fn plus_quotient(j: &ComplexStructure) -> Subspace {
    let shift = Matrix::identity(j.dim()).scale(&GaussianRational::i());
    j.j.sub(&shift).kernel()
}

/// `l = p⁻¹((g/h)₊) ⊆ g_C`.
pub fn plus_space(j: &ComplexStructure) -> Result<Subspace> {
    j.require_invariant()?;
    let lifted: Vec<Vector> = plus_quotient(j)
        .basis_vectors()
        .iter()
        .map(|w| j.quotient.lift(w))
        .collect();
    let n = j.g.dim();
    j.h().space().sum(&Subspace::from_vectors(n, &lifted))
}

/// Integrability as `N(e_a, e_b) = 0` on all basis pairs.
pub fn integrable_by_tensor(j: &ComplexStructure) -> Result<bool> {
    let d = j.dim();
    let units: Vec<Vector> = (0..d).map(|k| crate::exact::matrix::unit_vector(d, k)).collect();
    for a in 0..d {
        for b in (a + 1)..d {
            if !is_zero_vector(&nijenhuis(j, &units[a], &units[b])?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Integrability, decided both by `N ≡ 0` and by closure of `l`; the two
/// must agree.
pub fn is_integrable(j: &ComplexStructure) -> Result<bool> {
    let by_tensor = integrable_by_tensor(j)?;
    let by_closure = integrable_by_closure(j)?;
    if by_tensor != by_closure {
        return Err(Error::TheoremViolation(format!(
            "Nijenhuis tensor {} but l is {}",
            if by_tensor { "vanishes" } else { "is nonzero" },
            if by_closure { "closed" } else { "not closed" }
        )));
    }
    Ok(by_tensor)
}

/// Integrability as `[l, l] ⊆ l`.
pub fn integrable_by_closure(j: &ComplexStructure) -> Result<bool> {
    Ok(Subalgebra::span(j.g, plus_space(j)?)?.is_closed())
}

pub(crate) fn require_integrable(j: &ComplexStructure) -> Result<()> {
    if is_integrable(j)? {
        Ok(())
    } else {
        Err(Error::NotComplexStructure("J is not integrable".into()))
    }
}

/// A complex structure `J₁` on the abelian fiber `m/h`.
///
/// The fiber is `p(m)` inside the quotient coordinates of `g/h`; `j1` acts on
/// coordinates relative to the canonical basis of `fiber`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusComplexStructure {
    pub m: Subalgebra,
    pub fiber: Subspace,
    pub j1: Matrix,
}

impl TorusComplexStructure {
    pub fn fiber_space(g: &LieAlgebra, h: &Subalgebra, m: &Subalgebra) -> Result<Subspace> {
        if !m.space().contains_subspace(h.space()) {
            return Err(Error::LeviMismatch("h is not contained in m".into()));
        }
        Ok(Quotient::new(g, h)?.project_space(m.space()))
    }

    pub fn new(g: &LieAlgebra, h: &Subalgebra, m: &Subalgebra, j1: Matrix) -> Result<Self> {
        let fiber = Self::fiber_space(g, h, m)?;
        let d = fiber.dim();
        if d % 2 == 1 {
            return Err(Error::OddFiber(d));
        }
        check_square_minus_one(&j1, d, "J1")?;
        Ok(Self {
            m: m.clone(),
            fiber,
            j1,
        })
    }

    /// `J₁ w_{2k} = w_{2k+1}` on the canonical fiber basis.
    pub fn standard(g: &LieAlgebra, h: &Subalgebra, m: &Subalgebra) -> Result<Self> {
        let fiber = Self::fiber_space(g, h, m)?;
        let d = fiber.dim();
        if d % 2 == 1 {
            return Err(Error::OddFiber(d));
        }
        Self::new(g, h, m, standard_pairing(d))
    }

    pub fn dim(&self) -> usize {
        self.fiber.dim()
    }

    /// `(m/h)₊` in complexified quotient coordinates of `g/h`.
    pub fn plus_space(&self) -> Subspace {
        let shift = Matrix::identity(self.dim()).scale(&GaussianRational::i());
        let vs: Vec<Vector> = self
            .j1
            .sub(&shift)
            .kernel()
            .basis_vectors()
            .iter()
            .map(|c| self.fiber.combine(c))
            .collect();
        Subspace::from_vectors(self.fiber.ambient(), &vs)
    }
}

/// The block-diagonal rotation sending `e_{2k} ↦ e_{2k+1} ↦ −e_{2k}`.
pub fn standard_pairing(d: usize) -> Matrix {
    let mut j = Matrix::zeros(d, d);
    for k in 0..d / 2 {
        j.set(2 * k + 1, 2 * k, GaussianRational::one());
        j.set(2 * k, 2 * k + 1, -GaussianRational::one());
    }
    j
}
