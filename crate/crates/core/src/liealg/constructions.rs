//! Standard subalgebra constructions: centralizers, normalizers, derived
//! algebras, centers, maximal abelian extensions, Killing forms and radicals.

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, Subspace, Vector};

use super::algebra::LieAlgebra;
use super::subalgebra::Subalgebra;

/// `{x : [x, v] = 0 for all v ∈ s}`.
pub fn centralizer(g: &LieAlgebra, s: &Subspace) -> Subalgebra {
    let n = g.dim();
    let mut constraints = Matrix::zeros(0, n);
    for v in s.basis_vectors() {
        constraints = constraints.vstack(&g.ad(&v));
    }
    Subalgebra::trusted(g, constraints.kernel())
}

/// `{x : [x, s] ⊆ s}` for any subspace `s` of `g` or `g_C`.
pub fn normalizer_of_space(g: &LieAlgebra, s: &Subspace) -> Subalgebra {
    let n = g.dim();
    if s.dim() == n || s.is_zero() {
        return Subalgebra::trusted(g, Subspace::full(n));
    }
    let q = s.quotient_map();
    let mut constraints = Matrix::zeros(0, n);
    for v in s.basis_vectors() {
        // [x, v] = -ad(v) x
        constraints = constraints.vstack(&q.mul(&g.ad(&v)));
    }
    Subalgebra::trusted(g, constraints.kernel())
}

pub fn normalizer(g: &LieAlgebra, h: &Subalgebra) -> Subalgebra {
    normalizer_of_space(g, h.space())
}

/// Span of all `[a, b]` with `a ∈ A`, `b ∈ B`.
pub fn bracket_space(g: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let av = a.basis_vectors();
    let bv = b.basis_vectors();
    let mut out = Vec::with_capacity(av.len() * bv.len());
    for x in &av {
        for y in &bv {
            let z = g.bracket(x, y);
            if z.iter().any(|c| !c.is_zero()) {
                out.push(z);
            }
        }
    }
    Subspace::from_vectors(g.dim(), &out)
}

pub fn derived(g: &LieAlgebra, s: &Subalgebra) -> Result<Subalgebra> {
    s.require_closed()?;
    Ok(Subalgebra::trusted(g, bracket_space(g, s.space(), s.space())))
}

pub fn center(g: &LieAlgebra, s: &Subalgebra) -> Result<Subalgebra> {
    s.require_closed()?;
    let c = centralizer(g, s.space());
    let space = s.space().intersection(c.space())?;
    Ok(Subalgebra::trusted(g, space))
}

/// Greedy extension of an abelian `t` to a maximal abelian subalgebra of `g`.
pub fn extend_to_maximal_abelian(g: &LieAlgebra, t: &Subalgebra) -> Result<Subalgebra> {
    let whole = Subalgebra::trusted(g, Subspace::full(g.dim()));
    extend_to_maximal_abelian_within(g, &whole, t)
}

/// Greedy extension of an abelian `t ⊆ s` to a maximal abelian subalgebra of `s`:
/// while `C_s(a) ≠ a`, adjoin the first canonical basis vector of `C_s(a)` not in `a`.
pub fn extend_to_maximal_abelian_within(
    g: &LieAlgebra,
    s: &Subalgebra,
    t: &Subalgebra,
) -> Result<Subalgebra> {
    if !t.is_abelian(g) {
        return Err(Error::NotAbelian);
    }
    if !s.space().contains_subspace(t.space()) {
        return Err(Error::NotClosed(
            "seed is not contained in the ambient subalgebra".into(),
        ));
    }
    let mut a = t.space().clone();
    loop {
        let c = centralizer(g, &a).into_space().intersection(s.space())?;
        if c == a {
            return Ok(Subalgebra::trusted(g, a));
        }
        let next = c
            .basis_vectors()
            .into_iter()
            .find(|v| !a.contains(v))
            .expect("strictly larger centralizer");
        a = a.sum(&Subspace::from_vectors(g.dim(), &[next]))?;
    }
}

/// Matrix of `ad(x)` restricted to `s`, in the canonical basis of `s`.
pub fn restricted_ad(g: &LieAlgebra, s: &Subspace, x: &[GaussianRational]) -> Matrix {
    let cols: Vec<Vector> = s
        .basis_vectors()
        .iter()
        .map(|b| {
            s.coordinates(&g.bracket(x, b))
                .expect("restricted_ad requires [x, s] ⊆ s")
        })
        .collect();
    Matrix::from_columns(s.dim(), cols)
}

/// Killing form of the subalgebra `s` itself: `tr(ad_s x ∘ ad_s y)`.
pub fn killing_within(
    g: &LieAlgebra,
    s: &Subalgebra,
    x: &[GaussianRational],
    y: &[GaussianRational],
) -> GaussianRational {
    restricted_ad(g, s.space(), x)
        .mul(&restricted_ad(g, s.space(), y))
        .trace()
}

/// Radical of `l`: `{x ∈ l : κ_l(x, [l, l]) = 0}`.
pub fn radical(g: &LieAlgebra, l: &Subalgebra) -> Result<Subalgebra> {
    l.require_closed()?;
    let d = derived(g, l)?;
    let basis = l.basis_vectors();
    let ads: Vec<Matrix> = basis.iter().map(|b| restricted_ad(g, l.space(), b)).collect();
    let dads: Vec<Matrix> = d
        .basis_vectors()
        .iter()
        .map(|v| restricted_ad(g, l.space(), v))
        .collect();
    let mut k = Matrix::zeros(dads.len(), basis.len());
    for (r, dm) in dads.iter().enumerate() {
        for (c, am) in ads.iter().enumerate() {
            k.set(r, c, am.mul(dm).trace());
        }
    }
    let ker = k.kernel();
    let vs: Vec<Vector> = ker.basis_vectors().iter().map(|c| l.space().combine(c)).collect();
    Ok(Subalgebra::trusted(g, Subspace::from_vectors(g.dim(), &vs)))
}

/// Derived series `s ⊇ [s,s] ⊇ …` until it stabilises.
pub fn derived_series(g: &LieAlgebra, s: &Subalgebra) -> Result<Vec<Subalgebra>> {
    s.require_closed()?;
    let mut series = vec![s.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = derived(g, last)?;
        if next.space() == last.space() {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_solvable(g: &LieAlgebra, s: &Subalgebra) -> Result<bool> {
    Ok(derived_series(g, s)?.last().is_some_and(|t| t.space().is_zero()))
}

/// Lower central series `s ⊇ [s,s] ⊇ [s,[s,s]] ⊇ …` until it stabilises.
pub fn lower_central_series(g: &LieAlgebra, s: &Subalgebra) -> Result<Vec<Subspace>> {
    s.require_closed()?;
    let mut series = vec![s.space().clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = bracket_space(g, s.space(), last);
        if &next == last {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_nilpotent(g: &LieAlgebra, s: &Subalgebra) -> Result<bool> {
    Ok(lower_central_series(g, s)?.last().is_some_and(Subspace::is_zero))
}

/// Largest ideal of `g` contained in `h`: the maximal `ad(g)`-stable subspace of `h`.
pub fn largest_ideal_in(g: &LieAlgebra, h: &Subspace) -> Subspace {
    let n = g.dim();
    let ads: Vec<Matrix> = (0..n).map(|i| g.ad(&g.basis_vector(i))).collect();
    let mut s = h.clone();
    loop {
        if s.is_zero() {
            return s;
        }
        let mut next = s.clone();
        for a in &ads {
            let pre = s.preimage(a);
            next = next.intersection(&pre).expect("same ambient");
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

/// Orthogonal complement with respect to the invariant inner product.
pub fn orthogonal_complement(g: &LieAlgebra, s: &Subspace) -> Subspace {
    let rows: Vec<Vector> = s
        .basis_vectors()
        .iter()
        .map(|v| g.inner_product().mul_vec(v))
        .collect();
    Matrix::from_rows(g.dim(), rows).kernel()
}
