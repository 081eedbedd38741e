//! Subspaces of `Q(i)^n` held in canonical reduced row-echelon form.
//!
//! Two subspaces are equal exactly when their canonical bases coincide, so
//! `==` on [`Subspace`] decides subspace equality.

use super::matrix::{is_zero_vector, zero_vector, Matrix, Vector};
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient)?;
        f.debug_list()
            .entries(
                self.basis
                    .row_vectors()
                    .iter()
                    .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")),
            )
            .finish()
    }
}

impl Subspace {
    pub fn from_matrix(m: &Matrix) -> Self {
        let r = m.rref();
        Self {
            ambient: m.cols(),
            basis: r.matrix,
            pivots: r.pivots,
        }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vector]) -> Self {
        Self::from_matrix(&Matrix::from_rows(ambient, vectors.to_vec()))
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Coordinate subspace spanned by the given axes.
    pub fn coordinate(ambient: usize, axes: &[usize]) -> Self {
        let vs: Vec<Vector> = axes
            .iter()
            .map(|&k| super::matrix::unit_vector(ambient, k))
            .collect();
        Self::from_vectors(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Axes that are not pivots, in increasing order.
    pub fn free_axes(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&k| !is_pivot[k]).collect()
    }

    pub fn is_real(&self) -> bool {
        self.basis.is_real()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// `v` minus its component along the pivot rows; zero exactly when `v` lies in the subspace.
    pub fn residual(&self, v: &[GaussianRational]) -> Vector {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x -= &(&f * b);
                }
            }
        }
        r
    }

    /// Coordinates of `v` in the quotient by this subspace (non-pivot entries of the residual).
    pub fn quotient_coordinates(&self, v: &[GaussianRational]) -> Vector {
        let r = self.residual(v);
        self.free_axes().into_iter().map(|k| r[k].clone()).collect()
    }

    /// Matrix of the linear map `v ↦ quotient_coordinates(v)`.
    pub fn quotient_map(&self) -> Matrix {
        let n = self.ambient;
        let cols = (0..n)
            .map(|k| self.quotient_coordinates(&super::matrix::unit_vector(n, k)))
            .collect();
        Matrix::from_columns(n - self.dim(), cols)
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        v.len() == self.ambient && is_zero_vector(&self.residual(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[GaussianRational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of basis rows.
    pub fn combine(&self, coeffs: &[GaussianRational]) -> Vector {
        let mut v = zero_vector(self.ambient);
        for (c, i) in coeffs.iter().zip(0..self.dim()) {
            if c.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x += &(c * b);
                }
            }
        }
        v
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        self.ambient == other.ambient && other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the kernel of the residual constraints of `other` on combinations of `self`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        if other.dim() == other.ambient {
            return Ok(self.clone());
        }
        // columns: quotient coordinates (mod other) of each basis row of self
        let q = other.quotient_map();
        let images: Vec<Vector> = self.basis_vectors().iter().map(|b| q.mul_vec(b)).collect();
        let constraint = Matrix::from_columns(q.rows(), images);
        let ker = constraint.kernel();
        let vs: Vec<Vector> = ker.basis_vectors().iter().map(|c| self.combine(c)).collect();
        Ok(Self::from_vectors(self.ambient, &vs))
    }

    /// Deterministic complement: the coordinate subspace on the non-pivot axes.
    pub fn complement(&self) -> Self {
        Self::coordinate(self.ambient, &self.free_axes())
    }

    /// Entry-wise complex conjugate subspace.
    pub fn conj(&self) -> Self {
        Self::from_matrix(&self.basis.conj())
    }

    /// `S ∩ conj(S)`; its canonical basis is real and spans the real points of `S`.
    pub fn real_points(&self) -> Self {
        let c = self.conj();
        self.intersection(&c).expect("same ambient")
    }

    /// Image under a linear map.
    pub fn image(&self, map: &Matrix) -> Self {
        let vs: Vec<Vector> = self.basis_vectors().iter().map(|v| map.mul_vec(v)).collect();
        Self::from_vectors(map.rows(), &vs)
    }

    /// Preimage under a linear map.
    pub fn preimage(&self, map: &Matrix) -> Self {
        let q = self.quotient_map();
        q.mul(map).kernel()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::int_vector;

    #[test]
    fn transverse_lines() {
        let a = Subspace::from_vectors(2, &[int_vector(&[1, 0])]);
        let b = Subspace::from_vectors(2, &[int_vector(&[0, 1])]);
        assert!(a.intersection(&b).unwrap().is_zero());
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(2));
    }

    #[test]
    fn pivot_complement() {
        let a = Subspace::from_vectors(3, &[int_vector(&[1, 0, 0])]);
        let c = a.complement();
        assert_eq!(
            c,
            Subspace::from_vectors(3, &[int_vector(&[0, 1, 0]), int_vector(&[0, 0, 1])])
        );
    }

    #[test]
    fn ambient_mismatch() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert_eq!(a.sum(&b), Err(Error::AmbientMismatch { left: 2, right: 3 }));
        assert!(a.intersection(&b).is_err());
    }

    #[test]
    fn equality_is_canonical() {
        let a = Subspace::from_vectors(3, &[int_vector(&[1, 1, 0]), int_vector(&[0, 1, 1])]);
        let b = Subspace::from_vectors(3, &[int_vector(&[1, 2, 1]), int_vector(&[2, 1, -1])]);
        assert_eq!(a, b);
    }

    #[test]
    fn real_points_of_complex_span() {
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        let z = GaussianRational::zero();
        // span{(1, i, 0), (0, 0, 1)} has real points span{(0,0,1)}
        let s = Subspace::from_vectors(3, &[vec![one.clone(), i, z.clone()], vec![z.clone(), z, one]]);
        assert_eq!(s.real_points(), Subspace::coordinate(3, &[2]));
    }
}
