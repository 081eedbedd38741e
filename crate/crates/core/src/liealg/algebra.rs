use std::fmt;

use num_traits::{Signed, Zero};

use crate::catalog::AlgebraSpec;
use crate::error::{Error, Result};
use crate::exact::matrix::{conj_vector, unit_vector, zero_vector, Vector};
use crate::exact::{GaussianRational, Matrix, Rational};

/// Whether coordinates are read over `R` or over `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Real,
    Complexified,
}

/// A finite-dimensional Lie algebra given by rational structure constants
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`, together with an invariant inner product.
#[derive(Clone)]
pub struct LieAlgebra {
    name: String,
    dim: usize,
    structure: Vec<Rational>,
    // nonzero (k, c_ijk) per ordered pair (i, j)
    sparse: Vec<Vec<(usize, Rational)>>,
    inner_product: Matrix,
    field: Field,
    catalog: Option<AlgebraSpec>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("field", &self.field)
            .finish()
    }
}

/// The first failing check found by [`LieAlgebra::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationFailure {
    Antisymmetry {
        i: usize,
        j: usize,
        k: usize,
    },
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        value: Vector,
    },
    InnerProductShape {
        rows: usize,
        cols: usize,
    },
    InnerProductNotRational {
        i: usize,
        j: usize,
    },
    InnerProductNotSymmetric {
        i: usize,
        j: usize,
    },
    InnerProductNotPositive {
        index: usize,
    },
    InnerProductNotInvariant {
        i: usize,
        j: usize,
        k: usize,
    },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Antisymmetry { i, j, k } => {
                write!(f, "antisymmetry fails: c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]")
            }
            Self::Jacobi { i, j, k, value } => {
                let v: Vec<String> = value.iter().map(ToString::to_string).collect();
                write!(
                    f,
                    "Jacobi identity fails on (e{i}, e{j}, e{k}): [{}]",
                    v.join(", ")
                )
            }
            Self::InnerProductShape { rows, cols } => {
                write!(f, "inner product has shape {rows}x{cols}")
            }
            Self::InnerProductNotRational { i, j } => {
                write!(f, "inner product entry ({i}, {j}) is not rational")
            }
            Self::InnerProductNotSymmetric { i, j } => {
                write!(f, "inner product is not symmetric at ({i}, {j})")
            }
            Self::InnerProductNotPositive { index } => {
                write!(f, "inner product is not positive definite (pivot {index})")
            }
            Self::InnerProductNotInvariant { i, j, k } => write!(
                f,
                "inner product is not ad-invariant: <[e{i},e{j}],e{k}> + <e{j},[e{i},e{k}]> != 0"
            ),
        }
    }
}

impl LieAlgebra {
    /// Builds an algebra from a dense `dim³` tensor. Only shapes are checked
    /// here; use [`LieAlgebra::validate`] for the algebraic axioms.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        structure: Vec<Rational>,
        inner_product: Matrix,
    ) -> Result<Self> {
        if structure.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: structure.len(),
            });
        }
        if inner_product.rows() != dim || inner_product.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: inner_product.rows(),
            });
        }
        let mut sparse = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let c = &structure[(i * dim + j) * dim + k];
                    if !c.is_zero() {
                        sparse[i * dim + j].push((k, c.clone()));
                    }
                }
            }
        }
        Ok(Self {
            name: name.into(),
            dim,
            structure,
            sparse,
            inner_product,
            field: Field::Real,
            catalog: None,
        })
    }

    /// Builds an algebra and rejects it unless [`LieAlgebra::validate`] passes.
    pub fn validated(
        name: impl Into<String>,
        dim: usize,
        structure: Vec<Rational>,
        inner_product: Matrix,
    ) -> Result<Self> {
        let g = Self::new(name, dim, structure, inner_product)?;
        g.validate().map_err(|e| Error::InvalidSpec(e.to_string()))?;
        Ok(g)
    }

    pub(crate) fn with_catalog(mut self, spec: AlgebraSpec) -> Self {
        self.catalog = Some(spec);
        self
    }

    /// The catalog description this algebra was built from, if any.
    pub fn catalog_spec(&self) -> Option<&AlgebraSpec> {
        self.catalog.as_ref()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn inner_product(&self) -> &Matrix {
        &self.inner_product
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero `(k, c_ijk)` for a basis pair.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn basis_vector(&self, k: usize) -> Vector {
        unit_vector(self.dim, k)
    }

    /// `[x, y]` for coordinate vectors over `Q(i)`. Panics on a length mismatch;
    /// see [`LieAlgebra::checked_bracket`].
    pub fn bracket(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Vector {
        assert_eq!(x.len(), self.dim, "bracket argument length");
        assert_eq!(y.len(), self.dim, "bracket argument length");
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let terms = &self.sparse[i * self.dim + j];
                if terms.is_empty() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in terms {
                    out[*k] += &xy.scale(c);
                }
            }
        }
        out
    }

    pub fn checked_bracket(&self, x: &[GaussianRational], y: &[GaussianRational]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        Ok(self.bracket(x, y))
    }

    /// Matrix of `ad(x)`: column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[GaussianRational]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.sparse[i * n + j] {
                    let cur = m.get(*k, j) + &xi.scale(c);
                    m.set(*k, j, cur);
                }
            }
        }
        m
    }

    /// `tr(ad x ∘ ad y)` on the whole algebra.
    pub fn killing(&self, x: &[GaussianRational], y: &[GaussianRational]) -> GaussianRational {
        self.ad(x).mul(&self.ad(y)).trace()
    }

    pub fn killing_matrix(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad(&self.basis_vector(i))).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let v = ads[i].mul(&ads[j]).trace();
                k.set(i, j, v.clone());
                k.set(j, i, v);
            }
        }
        k
    }

    /// Complex-bilinear extension of the inner product.
    pub fn pairing(&self, x: &[GaussianRational], y: &[GaussianRational]) -> GaussianRational {
        let gy = self.inner_product.mul_vec(y);
        let mut acc = GaussianRational::zero();
        for (a, b) in x.iter().zip(&gy) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// Checks antisymmetry, the Jacobi identity, and that the inner product is
    /// rational, symmetric, positive definite and ad-invariant. Reports the
    /// first failure found.
    pub fn validate(&self) -> std::result::Result<(), ValidationFailure> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.structure_constant(i, j, k) != &-self.structure_constant(j, i, k) {
                        return Err(ValidationFailure::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            let ei = self.basis_vector(i);
            for j in (i + 1)..n {
                let ej = self.basis_vector(j);
                let eij = self.bracket(&ei, &ej);
                for k in (j + 1)..n {
                    let ek = self.basis_vector(k);
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let c = self.bracket(&ek, &eij);
                    let s: Vector = a.iter().zip(&b).zip(&c).map(|((x, y), z)| &(x + y) + z).collect();
                    if s.iter().any(|x| !x.is_zero()) {
                        return Err(ValidationFailure::Jacobi { i, j, k, value: s });
                    }
                }
            }
        }
        let ip = &self.inner_product;
        if ip.rows() != n || ip.cols() != n {
            return Err(ValidationFailure::InnerProductShape {
                rows: ip.rows(),
                cols: ip.cols(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if !ip.get(i, j).is_real() {
                    return Err(ValidationFailure::InnerProductNotRational { i, j });
                }
                if ip.get(i, j) != ip.get(j, i) {
                    return Err(ValidationFailure::InnerProductNotSymmetric { i, j });
                }
            }
        }
        if let Some(index) = first_nonpositive_pivot(ip) {
            return Err(ValidationFailure::InnerProductNotPositive { index });
        }
        for i in 0..n {
            let ei = self.basis_vector(i);
            for j in 0..n {
                let ej = self.basis_vector(j);
                let eij = self.bracket(&ei, &ej);
                for k in 0..n {
                    let ek = self.basis_vector(k);
                    let eik = self.bracket(&ei, &ek);
                    let s = &self.pairing(&eij, &ek) + &self.pairing(&ej, &eik);
                    if !s.is_zero() {
                        return Err(ValidationFailure::InnerProductNotInvariant { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// The same structure constants read over `Q(i)`.
    pub fn complexify(&self) -> Result<Self> {
        if self.field == Field::Complexified {
            return Err(Error::AlreadyComplex);
        }
        let mut g = self.clone();
        g.field = Field::Complexified;
        g.name = format!("({})_C", self.name);
        Ok(g)
    }

    /// Complex conjugation `τ` of `g_C` with respect to the real form.
    pub fn conjugate(&self, x: &[GaussianRational]) -> Vector {
        conj_vector(x)
    }
}

/// Index of the first non-positive pivot of symmetric Gaussian elimination,
/// `None` when the (real symmetric) matrix is positive definite.
pub(crate) fn first_nonpositive_pivot(m: &Matrix) -> Option<usize> {
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).re().clone()).collect())
        .collect();
    for k in 0..n {
        let p = a[k][k].clone();
        if !p.is_positive() {
            return Some(k);
        }
        for i in (k + 1)..n {
            let f = &a[i][k] / &p;
            if f.is_zero() {
                continue;
            }
            let (top, rest) = a.split_at_mut(i);
            for (x, y) in rest[0][k..].iter_mut().zip(&top[k][k..]) {
                *x -= &f * y;
            }
        }
    }
    None
}
