use proptest::prelude::*;

use invcx::exact::matrix::is_zero_vector;
use invcx::exact::scalar::ratio;
use invcx::exact::{
    char_poly, format_rational, parse_rational, rational_eigenvalues, GaussianRational, Matrix, Rational,
    Subspace,
};

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=4, -3i64..=3, prop::bool::weighted(0.3)).prop_map(|(p, q, im, complex)| {
        GaussianRational::new(ratio(p, q), ratio(if complex { im } else { 0 }, 1))
    })
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(gaussian(), c), r)
            .prop_map(move |rows| Matrix::from_rows(c, rows))
    })
}

/// Low-rank matrices are where elimination bugs hide, so mix in products.
fn low_rank(n: usize) -> impl Strategy<Value = Matrix> {
    (1..=n, 1..=n, matrix(n, 3)).prop_flat_map(move |(r, c, m)| {
        let k = m.cols();
        prop::collection::vec(prop::collection::vec(gaussian(), c), k).prop_map(move |rows| {
            let right = Matrix::from_rows(c, rows);
            let left = Matrix::from_rows(k, (0..r.min(m.rows())).map(|i| m.row(i).to_vec()).collect());
            left.mul(&right)
        })
    })
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(prop::collection::vec(gaussian(), n), 0..=n)
        .prop_map(move |vs| Subspace::from_vectors(n, &vs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_rank_nullity_holds(m in prop_oneof![matrix(5, 5), low_rank(5)]) {
        let r = m.rref();
        prop_assert_eq!(&r.matrix.rref().matrix, &r.matrix);
        prop_assert_eq!(r.rank, r.pivots.len());
        prop_assert_eq!(r.rank + m.kernel().dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in prop_oneof![matrix(4, 6), low_rank(6)]) {
        for v in m.kernel().basis_vectors() {
            prop_assert!(is_zero_vector(&m.mul_vec(&v)));
        }
    }

    #[test]
    fn subspace_is_canonical(vs in prop::collection::vec(prop::collection::vec(gaussian(), 4), 1..=4), c in gaussian()) {
        let s = Subspace::from_vectors(4, &vs);
        let mut shuffled: Vec<_> = vs.iter().rev().cloned().collect();
        if !c.is_zero() {
            shuffled[0] = shuffled[0].iter().map(|x| x * &c).collect();
        }
        shuffled.push(vs[0].iter().zip(&vs[vs.len() - 1]).map(|(a, b)| a + b).collect());
        prop_assert_eq!(Subspace::from_vectors(4, &shuffled), s.clone());
        for v in &vs {
            prop_assert!(s.contains(v));
        }
    }

    #[test]
    fn sum_and_intersection_dimensions(u in subspace(5), w in subspace(5)) {
        let sum = u.sum(&w).unwrap();
        let cap = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains_subspace(&u) && sum.contains_subspace(&w));
        prop_assert!(u.contains_subspace(&cap) && w.contains_subspace(&cap));
        prop_assert_eq!(u.intersection(&u).unwrap(), u.clone());
        prop_assert_eq!(cap.conj(), u.conj().intersection(&w.conj()).unwrap());
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(4, 4)) {
        prop_assume!(m.is_square());
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(m.rows()));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(m.rows()));
            }
            None => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn triangular_spectrum_is_the_diagonal(
        diag in prop::collection::vec(-5i64..=5, 1..=5),
        upper in prop::collection::vec(-3i64..=3, 10),
        s in matrix(5, 5),
    ) {
        let n = diag.len();
        let mut t = Matrix::zeros(n, n);
        let mut k = 0;
        for (i, &d) in diag.iter().enumerate() {
            t.set(i, i, GaussianRational::from_int(d));
            for j in (i + 1)..n {
                t.set(i, j, GaussianRational::from_int(upper[k]));
                k += 1;
            }
        }
        let mut expected: Vec<Rational> = diag.iter().map(|&d| ratio(d, 1)).collect();
        expected.sort();
        let mut found = rational_eigenvalues(&t).unwrap();
        found.sort();
        prop_assert_eq!(&found, &expected);

        // similarity leaves the characteristic polynomial alone
        if s.rows() == n && s.cols() == n {
            if let Some(inv) = s.inverse() {
                prop_assert_eq!(char_poly(&s.mul(&t).mul(&inv)), char_poly(&t));
            }
        }
    }

    #[test]
    fn rationals_round_trip(p in -1000i64..=1000, q in 1i64..=1000) {
        let r = ratio(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)), Some(r));
    }
}
