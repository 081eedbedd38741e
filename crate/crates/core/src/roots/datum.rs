use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::eigen::distinct;
use crate::exact::matrix::{add_vectors, scale_vector, Vector};
use crate::exact::{rational_eigenvalues, GaussianRational, Matrix, Rational, Subspace};
use crate::liealg::{centralizer, LieAlgebra, Subalgebra};

/// A root `α` of `g_C` relative to a Cartan subalgebra `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// `α(a_j)` on the canonical basis of the Cartan subalgebra; purely imaginary.
    pub values: Vec<GaussianRational>,
    /// The root space `g_α ⊆ g_C`.
    pub space: Subspace,
}

impl Root {
    /// Imaginary parts of the values, the rational coordinates of `α/i`.
    pub fn weights(&self) -> Vec<Rational> {
        self.values.iter().map(|v| v.im().clone()).collect()
    }

    /// Lexicographic positivity of the weight vector.
    pub fn is_lex_positive(&self) -> bool {
        self.values
            .iter()
            .find(|v| !v.is_zero())
            .is_some_and(|v| v.im().is_positive())
    }
}

/// Exact root-space decomposition `g_C = zero_space ⊕ ⊕_α g_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub cartan: Subalgebra,
    /// Regular element used to seed the decomposition.
    pub regular: Vector,
    pub roots: Vec<Root>,
    pub zero_space: Subspace,
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.cartan.dim()
    }

    pub fn index_of(&self, values: &[GaussianRational]) -> Option<usize> {
        self.roots.iter().position(|r| r.values == values)
    }

    /// Index of `−α`.
    pub fn negative(&self, idx: usize) -> usize {
        let neg: Vec<GaussianRational> = self.roots[idx].values.iter().map(|v| -v).collect();
        self.index_of(&neg).expect("roots come in ± pairs")
    }

    /// Index of `α + β` if it is a root.
    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<GaussianRational> = self.roots[a]
            .values
            .iter()
            .zip(&self.roots[b].values)
            .map(|(x, y)| x + y)
            .collect();
        self.index_of(&s)
    }

    /// `α(x)` for `x` in the complexified Cartan subalgebra.
    pub fn evaluate(&self, idx: usize, x: &[GaussianRational]) -> Option<GaussianRational> {
        let c = self.cartan.space().coordinates(x)?;
        let mut acc = GaussianRational::zero();
        for (ci, v) in c.iter().zip(&self.roots[idx].values) {
            acc += &(ci * v);
        }
        Some(acc)
    }

    /// Span of the given root spaces.
    pub fn root_span(&self, indices: &[usize]) -> Subspace {
        let n = self.zero_space.ambient();
        let vs: Vec<Vector> = indices
            .iter()
            .flat_map(|&i| self.roots[i].space.basis_vectors())
            .collect();
        Subspace::from_vectors(n, &vs)
    }

    /// Indices of the lexicographically positive roots, in order.
    pub fn positive_representatives(&self, among: &[usize]) -> Vec<usize> {
        among
            .iter()
            .copied()
            .filter(|&i| self.roots[i].is_lex_positive())
            .collect()
    }
}

fn check_cartan(g: &LieAlgebra, a: &Subalgebra) -> Result<()> {
    if !a.is_abelian(g) {
        return Err(Error::NotAbelian);
    }
    if centralizer(g, a.space()).space() != a.space() {
        return Err(Error::NotCartan);
    }
    Ok(())
}

fn combination(a: &Subalgebra, coeffs: &[i64]) -> Vector {
    let basis = a.basis_vectors();
    let mut h = vec![GaussianRational::zero(); a.space().ambient()];
    for (c, b) in coeffs.iter().zip(&basis) {
        if *c != 0 {
            h = add_vectors(&h, &scale_vector(&GaussianRational::from_int(*c), b));
        }
    }
    h
}

/// Geometric coefficient vectors `(1, k, k², …)` for `k = 0, 2, 3, …`.
///
/// `k = 0` tries the first basis vector alone; `k = 1` is skipped since the
/// all-ones vector is one of the least separating choices.
pub(crate) fn geometric_coefficients(len: usize) -> impl Iterator<Item = Vec<i64>> {
    std::iter::once(0i64).chain(2..).map(move |k| {
        let mut c = Vec::with_capacity(len);
        let mut p = 1i64;
        for _ in 0..len {
            c.push(p);
            p = p.saturating_mul(k);
        }
        c
    })
}

const SEARCH_LIMIT: usize = 4096;

/// First `h₀ = Σ k^j a_j` along [`geometric_coefficients`] with `C_g(h₀) = a`.
pub fn find_regular(g: &LieAlgebra, a: &Subalgebra) -> Result<Vector> {
    check_cartan(g, a)?;
    if a.dim() == 0 {
        return Ok(vec![GaussianRational::zero(); g.dim()]);
    }
    for coeffs in geometric_coefficients(a.dim()).take(SEARCH_LIMIT) {
        let h = combination(a, &coeffs);
        let line = Subspace::from_vectors(g.dim(), std::slice::from_ref(&h));
        if centralizer(g, &line).dim() == a.dim() {
            return Ok(h);
        }
    }
    Err(Error::NotCartan)
}

/// Joint eigenspaces of `ad(a)` on `g_C`.
///
/// The eigenspaces of `i·ad(h₀)` for a regular `h₀` are refined by those of
/// each `i·ad(a_j)`; a root's value on `a_j` is `−i` times the eigenvalue.
pub fn root_decomposition(g: &LieAlgebra, a: &Subalgebra) -> Result<RootDatum> {
    let h0 = find_regular(g, a)?;
    let n = g.dim();
    let i = GaussianRational::i();
    let id = Matrix::identity(n);

    let mut generators = vec![h0.clone()];
    generators.extend(a.basis_vectors());

    // (space, eigenvalues of i·ad(a_j) for each cartan basis vector so far)
    let mut pieces: Vec<(Subspace, Vec<Rational>)> = vec![(Subspace::full(n), Vec::new())];
    for (step, x) in generators.iter().enumerate() {
        let m = g.ad(x).scale(&i);
        let spectrum = distinct(&rational_eigenvalues(&m)?);
        let eigenspaces: Vec<(Rational, Subspace)> = spectrum
            .into_iter()
            .map(|lam| {
                let shifted = m.sub(&id.scale(&GaussianRational::real(lam.clone())));
                (lam, shifted.kernel())
            })
            .collect();
        let mut next = Vec::new();
        for (space, vals) in &pieces {
            for (lam, e) in &eigenspaces {
                let s = space.intersection(e)?;
                if s.is_zero() {
                    continue;
                }
                let mut v = vals.clone();
                if step > 0 {
                    v.push(lam.clone());
                }
                next.push((s, v));
            }
        }
        let total: usize = next.iter().map(|(s, _)| s.dim()).sum();
        if total != n {
            return Err(Error::NonSemisimpleAction(format!(
                "eigenspaces of generator {step} span {total} of {n} dimensions"
            )));
        }
        pieces = next;
    }

    let mut zero_space = Subspace::zero(n);
    let mut roots = Vec::new();
    for (space, lams) in pieces {
        if lams.iter().all(Zero::is_zero) {
            zero_space = space;
            continue;
        }
        // ad(a_j) v = -i λ_j v
        let values = lams
            .iter()
            .map(|l| GaussianRational::new(Rational::zero(), -l))
            .collect();
        roots.push(Root { values, space });
    }
    roots.sort_by(compare_roots);

    let datum = RootDatum {
        cartan: a.clone(),
        regular: h0,
        roots,
        zero_space,
    };
    validate_datum(g, &datum)?;
    Ok(datum)
}

/// Lexicographically positive roots first, each group ordered by weight vector.
fn compare_roots(x: &Root, y: &Root) -> Ordering {
    let kx = (!x.is_lex_positive(), x.weights());
    let ky = (!y.is_lex_positive(), y.weights());
    match (kx.0, ky.0) {
        (false, false) => kx.1.cmp(&ky.1).reverse(),
        _ => kx.cmp(&ky),
    }
}

fn validate_datum(g: &LieAlgebra, rd: &RootDatum) -> Result<()> {
    let n = g.dim();
    let total = rd.zero_space.dim() + rd.roots.iter().map(|r| r.space.dim()).sum::<usize>();
    if total != n {
        return Err(Error::NonSemisimpleAction(format!(
            "root spaces span {total} of {n} dimensions"
        )));
    }
    let cartan = rd.cartan.basis_vectors();
    for r in &rd.roots {
        for v in r.space.basis_vectors() {
            for (aj, val) in cartan.iter().zip(&r.values) {
                if g.bracket(aj, &v) != scale_vector(val, &v) {
                    return Err(Error::NonSemisimpleAction(
                        "Cartan element does not act by a scalar on a root space".into(),
                    ));
                }
            }
        }
        if r.values.iter().any(|v| !v.re().is_zero()) {
            return Err(Error::NonSemisimpleAction("root value with a real part".into()));
        }
        let neg: Vec<GaussianRational> = r.values.iter().map(|v| -v).collect();
        let Some(k) = rd.index_of(&neg) else {
            return Err(Error::NonSemisimpleAction("root without its negative".into()));
        };
        if rd.roots[k].space != r.space.conj() {
            return Err(Error::NonSemisimpleAction(
                "conjugation does not exchange g_α and g_-α".into(),
            ));
        }
    }
    if !rd.zero_space.contains_subspace(rd.cartan.space()) {
        return Err(Error::NonSemisimpleAction(
            "zero weight space misses the Cartan".into(),
        ));
    }
    Ok(())
}
