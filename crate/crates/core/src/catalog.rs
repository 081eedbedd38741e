//! Standard compact Lie algebras and named subalgebras in fixed bases.
//!
//! Basis conventions (all structure constants are integers or halves):
//!
//! * `su(n)`: `(E_jk − E_kj)/2` for `j < k` (lexicographic), then `i(E_jk + E_kj)/2`
//!   for `j < k`, then `i(E_jj − E_{j+1,j+1})/2`. For `su(2)` this gives
//!   `[e_i, e_j] = ε_ijk e_k`.
//! * `so(n)`: `E_jk − E_kj` for `j < k`, lexicographic.
//! * `u(n)`: `torus(1) ⊕ su(n)`, the central direction first.
//! * `torus(k)`: abelian, standard basis.
//! * sums: block-diagonal, factors in the given order.
//!
//! The inner product is `−κ` on semisimple factors and the identity on
//! abelian factors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::unit_vector;
use crate::exact::scalar::{rat, Rational};
use crate::exact::{GaussianRational, Matrix, Subspace, Vector};
use crate::liealg::{center, first_nonpositive_pivot, LieAlgebra, Subalgebra};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum AlgebraSpec {
    #[serde(rename = "su")]
    Su(#[serde(with = "n_field")] usize),
    #[serde(rename = "so")]
    So(#[serde(with = "n_field")] usize),
    #[serde(rename = "u")]
    U(#[serde(with = "n_field")] usize),
    Torus(#[serde(with = "k_field")] usize),
    Sum(#[serde(with = "summands_field")] Vec<AlgebraSpec>),
}

// Newtype variants inside internally tagged enums serialise their payload
// as a map, so each payload is wrapped in a one-field struct.
macro_rules! field_module {
    ($m:ident, $name:ident, $ty:ty) => {
        mod $m {
            use serde::{Deserialize, Deserializer, Serialize, Serializer};

            #[derive(Serialize, Deserialize)]
            #[serde(deny_unknown_fields)]
            struct Wrap {
                $name: $ty,
            }

            #[allow(clippy::ptr_arg)]
            pub fn serialize<S: Serializer>(v: &$ty, s: S) -> Result<S::Ok, S::Error> {
                Wrap { $name: v.clone() }.serialize(s)
            }

            pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<$ty, D::Error> {
                Wrap::deserialize(d).map(|w| w.$name)
            }
        }
    };
}

field_module!(n_field, n, usize);
field_module!(k_field, k, usize);
field_module!(summands_field, summands, Vec<super::AlgebraSpec>);

impl AlgebraSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Su(n) | Self::So(n) | Self::U(n) if *n < 2 => Err(Error::InvalidSpec(format!(
                "{} requires n >= 2, got {n}",
                self.kind_name()
            ))),
            Self::Torus(0) => Err(Error::InvalidSpec("torus requires k >= 1".into())),
            Self::Sum(parts) if parts.is_empty() => {
                Err(Error::InvalidSpec("sum needs at least one summand".into()))
            }
            Self::Sum(parts) => parts.iter().try_for_each(Self::validate),
            _ => Ok(()),
        }
    }

    fn kind_name(&self) -> &'static str {
        match self {
            Self::Su(_) => "su",
            Self::So(_) => "so",
            Self::U(_) => "u",
            Self::Torus(_) => "torus",
            Self::Sum(_) => "sum",
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Su(n) => format!("su({n})"),
            Self::So(n) => format!("so({n})"),
            Self::U(n) => format!("u({n})"),
            Self::Torus(k) => format!("torus({k})"),
            Self::Sum(parts) => parts.iter().map(Self::name).collect::<Vec<_>>().join("+"),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Su(n) => n * n - 1,
            Self::So(n) => n * (n - 1) / 2,
            Self::U(n) => n * n,
            Self::Torus(k) => *k,
            Self::Sum(parts) => parts.iter().map(Self::dim).sum(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Self::Su(n) => n - 1,
            Self::So(n) => n / 2,
            Self::U(n) => *n,
            Self::Torus(k) => *k,
            Self::Sum(parts) => parts.iter().map(Self::rank).sum(),
        }
    }

    /// Basis axes spanning the standard maximal torus.
    pub fn torus_axes(&self) -> Vec<usize> {
        match self {
            Self::Su(n) => {
                let off = n * (n - 1);
                (off..off + n - 1).collect()
            }
            Self::So(n) => (0..n / 2).map(|k| pair_index(*n, 2 * k, 2 * k + 1)).collect(),
            Self::U(n) => std::iter::once(0)
                .chain(Self::Su(*n).torus_axes().into_iter().map(|a| a + 1))
                .collect(),
            Self::Torus(k) => (0..*k).collect(),
            Self::Sum(parts) => {
                let mut off = 0;
                let mut out = Vec::new();
                for p in parts {
                    out.extend(p.torus_axes().into_iter().map(|a| a + off));
                    off += p.dim();
                }
                out
            }
        }
    }

    /// Human-readable description of the basis, reported by the CLI.
    pub fn basis_convention(&self) -> String {
        match self {
            Self::Su(n) => format!(
                "su({n}): (E_jk - E_kj)/2 for j<k, then i(E_jk + E_kj)/2 for j<k, then i(E_jj - E_(j+1)(j+1))/2; indices from 0"
            ),
            Self::So(n) => format!("so({n}): E_jk - E_kj for j<k, lexicographic; indices from 0"),
            Self::U(n) => format!("u({n}) = torus(1) + su({n}): index 0 is the central i*I, then the su({n}) basis"),
            Self::Torus(k) => format!("torus({k}): abelian, standard basis"),
            Self::Sum(parts) => parts
                .iter()
                .map(Self::basis_convention)
                .collect::<Vec<_>>()
                .join("; then "),
        }
    }
}

/// Index of `E_jk − E_kj` among the lexicographic pairs `j < k < n`.
fn pair_index(n: usize, j: usize, k: usize) -> usize {
    (0..j).map(|r| n - 1 - r).sum::<usize>() + (k - j - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum SubalgebraSpec {
    MaximalTorus,
    Zero,
    Center,
    BlockU {
        k: usize,
    },
    /// Explicit spanning vectors, entries as rational strings.
    Span {
        basis: Vec<Vec<String>>,
    },
}

fn su_basis(n: usize) -> Vec<Matrix> {
    let half = GaussianRational::real(Rational::new(1.into(), 2.into()));
    let ihalf = GaussianRational::new(rat(0), Rational::new(1.into(), 2.into()));
    let mut basis = Vec::new();
    for j in 0..n {
        for k in (j + 1)..n {
            let mut m = Matrix::zeros(n, n);
            m.set(j, k, half.clone());
            m.set(k, j, -&half);
            basis.push(m);
        }
    }
    for j in 0..n {
        for k in (j + 1)..n {
            let mut m = Matrix::zeros(n, n);
            m.set(j, k, ihalf.clone());
            m.set(k, j, ihalf.clone());
            basis.push(m);
        }
    }
    for j in 0..n - 1 {
        let mut m = Matrix::zeros(n, n);
        m.set(j, j, ihalf.clone());
        m.set(j + 1, j + 1, -&ihalf);
        basis.push(m);
    }
    basis
}

fn so_basis(n: usize) -> Vec<Matrix> {
    let mut basis = Vec::new();
    for j in 0..n {
        for k in (j + 1)..n {
            let mut m = Matrix::zeros(n, n);
            m.set(j, k, GaussianRational::one());
            m.set(k, j, GaussianRational::from_int(-1));
            basis.push(m);
        }
    }
    basis
}

/// Solves for coordinates of matrices in a fixed matrix basis.
struct MatrixCoordinates {
    basis: Vec<Matrix>,
    left_inverse: Matrix,
}

impl MatrixCoordinates {
    fn new(basis: Vec<Matrix>) -> Self {
        // Each basis matrix flattened to real coordinates (re parts, then im parts).
        let cols: Vec<Vector> = basis.iter().map(flatten_real).collect();
        let a = Matrix::from_columns(cols[0].len(), cols);
        let at = a.transpose();
        let gram_inv = at.mul(&a).inverse().expect("linearly independent basis");
        Self {
            basis,
            left_inverse: gram_inv.mul(&at),
        }
    }

    fn coordinates(&self, m: &Matrix) -> Vector {
        let v = flatten_real(m);
        let c = self.left_inverse.mul_vec(&v);
        debug_assert_eq!(self.combine(&c), *m);
        c
    }

    fn combine(&self, c: &[GaussianRational]) -> Matrix {
        let n = self.basis[0].rows();
        let mut m = Matrix::zeros(n, n);
        for (x, b) in c.iter().zip(&self.basis) {
            m = m.add(&b.scale(x));
        }
        m
    }
}

fn flatten_real(m: &Matrix) -> Vector {
    let mut v = Vec::with_capacity(2 * m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            v.push(GaussianRational::real(m.get(i, j).re().clone()));
        }
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            v.push(GaussianRational::real(m.get(i, j).im().clone()));
        }
    }
    v
}

fn structure_from_matrices(basis: Vec<Matrix>) -> Vec<Rational> {
    let d = basis.len();
    let coords = MatrixCoordinates::new(basis);
    let mut c = vec![rat(0); d * d * d];
    for i in 0..d {
        for j in (i + 1)..d {
            let comm = coords.basis[i].commutator(&coords.basis[j]);
            let x = coords.coordinates(&comm);
            for (k, v) in x.iter().enumerate() {
                debug_assert!(v.is_real());
                c[(i * d + j) * d + k] = v.re().clone();
                c[(j * d + i) * d + k] = -v.re().clone();
            }
        }
    }
    c
}

/// `−κ` when positive definite; the identity for abelian algebras.
fn default_inner_product(dim: usize, structure: &[Rational]) -> Result<Matrix> {
    let probe = LieAlgebra::new("probe", dim, structure.to_vec(), Matrix::identity(dim))?;
    if structure.iter().all(|c| c == &rat(0)) {
        return Ok(Matrix::identity(dim));
    }
    let neg_killing = probe.killing_matrix().scale(&GaussianRational::from_int(-1));
    if first_nonpositive_pivot(&neg_killing).is_some() {
        return Err(Error::InvalidSpec(
            "no default inner product: -Killing is not positive definite".into(),
        ));
    }
    Ok(neg_killing)
}

fn simple_parts(spec: &AlgebraSpec) -> (usize, Vec<Rational>, Matrix) {
    match spec {
        AlgebraSpec::Torus(k) => (*k, vec![rat(0); k * k * k], Matrix::identity(*k)),
        AlgebraSpec::Su(n) | AlgebraSpec::So(n) => {
            let basis = if matches!(spec, AlgebraSpec::Su(_)) {
                su_basis(*n)
            } else {
                so_basis(*n)
            };
            let d = basis.len();
            let c = structure_from_matrices(basis);
            let ip = default_inner_product(d, &c).expect("compact catalog algebra");
            (d, c, ip)
        }
        AlgebraSpec::U(n) => simple_parts(&AlgebraSpec::Sum(vec![
            AlgebraSpec::Torus(1),
            AlgebraSpec::Su(*n),
        ])),
        AlgebraSpec::Sum(parts) => {
            let pieces: Vec<_> = parts.iter().map(simple_parts).collect();
            let d: usize = pieces.iter().map(|p| p.0).sum();
            let mut c = vec![rat(0); d * d * d];
            let mut ip = Matrix::zeros(d, d);
            let mut off = 0;
            for (pd, pc, pip) in &pieces {
                for i in 0..*pd {
                    for j in 0..*pd {
                        ip.set(off + i, off + j, pip.get(i, j).clone());
                        for k in 0..*pd {
                            c[((off + i) * d + off + j) * d + off + k] = pc[(i * pd + j) * pd + k].clone();
                        }
                    }
                }
                off += pd;
            }
            (d, c, ip)
        }
    }
}

/// Builds a catalog algebra; every output passes [`LieAlgebra::validate`].
pub fn build(spec: &AlgebraSpec) -> Result<LieAlgebra> {
    spec.validate()?;
    let (d, c, ip) = simple_parts(spec);
    LieAlgebra::new(spec.name(), d, c, ip).map(|g| g.with_catalog(spec.clone()))
}

/// Central element `i·diag((n−k)·I_k, −k·I_{n−k})` of the `u(k)` block, in catalog coordinates.
fn block_center(n: usize, k: usize) -> Vector {
    let coords = MatrixCoordinates::new(su_basis(n));
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        let d = if j < k { (n - k) as i64 } else { -(k as i64) };
        m.set(j, j, GaussianRational::from_ints(0, d));
    }
    coords.coordinates(&m)
}

/// Basis indices of the `su(k)` block (top-left `k × k`) inside `su(n)`.
fn su_block_axes(n: usize, k: usize) -> Vec<usize> {
    let pairs = n * (n - 1) / 2;
    let mut axes = Vec::new();
    for j in 0..k {
        for l in (j + 1)..k {
            let p = pair_index(n, j, l);
            axes.push(p);
            axes.push(pairs + p);
        }
    }
    for j in 0..k.saturating_sub(1) {
        axes.push(2 * pairs + j);
    }
    axes.sort_unstable();
    axes
}

pub fn build_subalgebra(g: &LieAlgebra, spec: &SubalgebraSpec) -> Result<Subalgebra> {
    let n = g.dim();
    match spec {
        SubalgebraSpec::Zero => Subalgebra::new(g, Subspace::zero(n)),
        SubalgebraSpec::Center => {
            let full = Subalgebra::new(g, Subspace::full(n))?;
            center(g, &full)
        }
        SubalgebraSpec::MaximalTorus => {
            let axes = match g.catalog_spec() {
                Some(s) => s.torus_axes(),
                None => {
                    let zero = Subalgebra::new(g, Subspace::zero(n))?;
                    let a = crate::liealg::extend_to_maximal_abelian(g, &zero)?;
                    return Ok(a);
                }
            };
            Subalgebra::new(g, Subspace::coordinate(n, &axes))
        }
        SubalgebraSpec::BlockU { k } => {
            let Some(AlgebraSpec::Su(m)) = g.catalog_spec() else {
                return Err(Error::InvalidSpec("block_u is only defined for su(n)".into()));
            };
            let m = *m;
            if *k == 0 || *k >= m {
                return Err(Error::InvalidSpec(format!(
                    "block_u requires 1 <= k < n, got k = {k}, n = {m}"
                )));
            }
            let mut vs: Vec<Vector> = su_block_axes(m, *k)
                .into_iter()
                .map(|a| unit_vector(n, a))
                .collect();
            vs.push(block_center(m, *k));
            Subalgebra::new(g, Subspace::from_vectors(n, &vs))
        }
        SubalgebraSpec::Span { basis } => {
            let mut vs = Vec::with_capacity(basis.len());
            for row in basis {
                if row.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        found: row.len(),
                    });
                }
                let mut v = Vec::with_capacity(n);
                for s in row {
                    let r = crate::exact::parse_rational(s)
                        .ok_or_else(|| Error::InvalidSpec(format!("bad rational literal {s:?}")))?;
                    v.push(GaussianRational::real(r));
                }
                vs.push(v);
            }
            Subalgebra::new(g, Subspace::from_vectors(n, &vs))
        }
    }
}
