use crate::error::Result;
use crate::exact::matrix::unit_vector;
use crate::exact::{GaussianRational, Matrix, Subspace, Vector};

use super::algebra::LieAlgebra;
use super::subalgebra::Subalgebra;

/// The quotient `g/h` with coordinates on the non-pivot axes of `h`.
///
/// `projection` is `p: g → g/h`; `section` sends quotient coordinates to the
/// complement spanned by those axes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    h: Subalgebra,
    complement: Subspace,
    axes: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

impl Quotient {
    pub fn new(g: &LieAlgebra, h: &Subalgebra) -> Result<Self> {
        h.require_closed()?;
        let axes = h.space().free_axes();
        let n = g.dim();
        let complement = Subspace::coordinate(n, &axes);
        let projection = h.space().quotient_map();
        let section = Matrix::from_columns(n, axes.iter().map(|&a| unit_vector(n, a)).collect());
        Ok(Self {
            h: h.clone(),
            complement,
            axes,
            projection,
            section,
        })
    }

    pub fn h(&self) -> &Subalgebra {
        &self.h
    }

    pub fn complement(&self) -> &Subspace {
        &self.complement
    }

    /// Basis axes of `g` that index the quotient coordinates.
    pub fn axes(&self) -> &[usize] {
        &self.axes
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, x: &[GaussianRational]) -> Vector {
        self.h.space().quotient_coordinates(x)
    }

    pub fn lift(&self, u: &[GaussianRational]) -> Vector {
        self.section.mul_vec(u)
    }

    /// Matrix of the induced action `ad̄(x)` on `g/h`; meaningful for `x ∈ N_g(h)`.
    pub fn induced_ad(&self, g: &LieAlgebra, x: &[GaussianRational]) -> Matrix {
        self.projection.mul(&g.ad(x)).mul(&self.section)
    }

    /// Image `p(s)` of a subspace of `g` (or `g_C`) in quotient coordinates.
    pub fn project_space(&self, s: &Subspace) -> Subspace {
        s.image(&self.projection)
    }

    /// `p⁻¹(v)` for a subspace of quotient coordinates; always contains `h`.
    pub fn preimage(&self, v: &Subspace) -> Subspace {
        v.preimage(&self.projection)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, AlgebraSpec};

    #[test]
    fn su2_mod_e3() {
        let g = build(&AlgebraSpec::Su(2)).unwrap();
        let h = Subalgebra::from_vectors(&g, &[g.basis_vector(2)]).unwrap();
        let q = Quotient::new(&g, &h).unwrap();
        assert_eq!(q.complement(), &Subspace::coordinate(3, &[0, 1]));
        assert!(q.project(&g.basis_vector(2)).iter().all(|x| x.is_zero()));
        assert_eq!(q.projection().mul(q.section()), Matrix::identity(2));
        // section ∘ projection restricted to the complement is the identity
        for v in q.complement().basis_vectors() {
            assert_eq!(q.lift(&q.project(&v)), v);
        }
        assert_eq!(q.projection().kernel(), *h.space());
    }

    #[test]
    fn zero_subalgebra_gives_identity() {
        let g = build(&AlgebraSpec::Su(2)).unwrap();
        let h = Subalgebra::new(&g, Subspace::zero(3)).unwrap();
        let q = Quotient::new(&g, &h).unwrap();
        assert_eq!(q.projection(), &Matrix::identity(3));
    }

    #[test]
    fn su3_mod_torus() {
        let g = build(&AlgebraSpec::Su(3)).unwrap();
        let t = crate::catalog::build_subalgebra(&g, &crate::catalog::SubalgebraSpec::MaximalTorus).unwrap();
        let q = Quotient::new(&g, &t).unwrap();
        assert_eq!(q.dim(), 6);
    }

    #[test]
    fn unclosed_h_is_rejected() {
        let g = build(&AlgebraSpec::Su(2)).unwrap();
        let s = Subalgebra::span(&g, Subspace::coordinate(3, &[0, 1])).unwrap();
        assert!(!s.is_closed());
        assert!(Quotient::new(&g, &s).is_err());
    }
}
