//! Characteristic polynomials and rational spectra.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::matrix::Matrix;
use super::scalar::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// Coefficients of `det(x·I − m)` in descending degree, leading coefficient 1.
///
/// Uses Berkowitz's division-free recurrence, so entries that are Gaussian
/// integers stay Gaussian integers throughout.
pub fn char_poly(m: &Matrix) -> Vec<GaussianRational> {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut v = vec![GaussianRational::one()];
    for k in 0..n {
        // Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C
        let mut t = Vec::with_capacity(k + 2);
        t.push(GaussianRational::one());
        t.push(-m.get(k, k));
        let mut col: Vec<GaussianRational> = (0..k).map(|i| m.get(i, k).clone()).collect();
        for _ in 0..k {
            let mut rc = GaussianRational::zero();
            for (j, c) in col.iter().enumerate() {
                rc += &(m.get(k, j) * c);
            }
            t.push(-rc);
            let next: Vec<GaussianRational> = (0..k)
                .map(|i| {
                    let mut acc = GaussianRational::zero();
                    for (j, c) in col.iter().enumerate() {
                        let a = m.get(i, j);
                        if !a.is_zero() && !c.is_zero() {
                            acc += &(a * c);
                        }
                    }
                    acc
                })
                .collect();
            col = next;
        }
        // v_new = T v, T lower-triangular Toeplitz of shape (k+2) x (k+1)
        let mut w = vec![GaussianRational::zero(); k + 2];
        for (i, wi) in w.iter_mut().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                if i >= j {
                    *wi += &(&t[i - j] * vj);
                }
            }
        }
        v = w;
    }
    v
}

/// All eigenvalues of `m` with multiplicity, in ascending order.
///
/// The caller asserts that the spectrum is rational; if the rational roots of
/// the characteristic polynomial do not account for the full dimension,
/// [`Error::IrrationalSpectrum`] is returned.
pub fn rational_eigenvalues(m: &Matrix) -> Result<Vec<Rational>> {
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let d = m.denominator_lcm();
    let scaled = m.scale_rational(&Rational::from_integer(d.clone()));
    let poly = char_poly(&scaled);
    if poly.iter().any(|c| !c.is_real()) {
        return Err(Error::IrrationalSpectrum { found: 0, dim: n });
    }
    let mut coeffs: Vec<BigInt> = poly.iter().map(|c| c.re().to_integer()).collect();

    let mut roots: Vec<BigInt> = Vec::new();
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
        roots.push(BigInt::zero());
    }

    // Integer roots of a monic integer polynomial divide the constant term and
    // are bounded by the maximum absolute row sum of the scaled matrix.
    let bound = (0..n)
        .map(|i| scaled.row(i).iter().fold(Rational::zero(), |acc, x| acc + x.l1()))
        .max()
        .unwrap_or_else(Rational::zero)
        .ceil()
        .to_integer();
    if coeffs.len() > 1 {
        let constant = coeffs.last().cloned().unwrap_or_default().abs();
        let limit = bound.min(constant.clone());
        let limit = limit.to_u64().unwrap_or(u64::MAX);
        let mut k: u64 = 1;
        while k <= limit && coeffs.len() > 1 {
            let kb = BigInt::from(k);
            let c = coeffs.last().cloned().unwrap_or_default();
            if c.is_multiple_of(&kb) {
                for cand in [kb.clone(), -kb.clone()] {
                    while coeffs.len() > 1 {
                        match divide_root(&coeffs, &cand) {
                            Some(q) => {
                                coeffs = q;
                                roots.push(cand.clone());
                            }
                            None => break,
                        }
                    }
                }
            }
            k += 1;
        }
    }

    if roots.len() != n {
        return Err(Error::IrrationalSpectrum {
            found: roots.len(),
            dim: n,
        });
    }
    let mut out: Vec<Rational> = roots.into_iter().map(|r| Rational::new(r, d.clone())).collect();
    out.sort();
    Ok(out)
}

/// Synthetic division by `(x - r)`; `None` if `r` is not a root.
fn divide_root(coeffs: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let mut q = Vec::with_capacity(coeffs.len() - 1);
    let mut acc = BigInt::zero();
    for c in &coeffs[..coeffs.len() - 1] {
        acc = &acc * r + c;
        q.push(acc.clone());
    }
    let rem = &acc * r + &coeffs[coeffs.len() - 1];
    rem.is_zero().then_some(q)
}

/// Distinct values of a sorted list.
pub fn distinct(values: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for v in values {
        if out.last() != Some(v) {
            out.push(v.clone());
        }
    }
    out
}
