//! Cartan subalgebras, root-space decompositions of `g_C`, positive systems
//! relative to a Levi factor, and parabolic subalgebras.

mod datum;
mod parabolic;

pub use datum::{find_regular, root_decomposition, Root, RootDatum};
pub use parabolic::{
    build_parabolic, enumerate_positive_systems, levi_split, pairing_radical, parabolic_from_abelian,
    positive_set_from_abelian, LeviSplit, Parabolic,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, build_subalgebra, AlgebraSpec, SubalgebraSpec};
    use crate::exact::matrix::{add_vectors, int_vector, scale_vector};
    use crate::exact::{GaussianRational, Subspace};
    use crate::liealg::{centralizer, LieAlgebra, Subalgebra};
    use crate::Error;

    fn alg(spec: AlgebraSpec) -> LieAlgebra {
        build(&spec).unwrap()
    }

    fn torus(g: &LieAlgebra) -> Subalgebra {
        build_subalgebra(g, &SubalgebraSpec::MaximalTorus).unwrap()
    }

    fn su2xsu2() -> LieAlgebra {
        alg(AlgebraSpec::Sum(vec![AlgebraSpec::Su(2), AlgebraSpec::Su(2)]))
    }

    #[test]
    fn regular_elements() {
        let g = alg(AlgebraSpec::Su(2));
        assert_eq!(find_regular(&g, &torus(&g)).unwrap(), g.basis_vector(2));

        let g2 = su2xsu2();
        assert_eq!(
            find_regular(&g2, &torus(&g2)).unwrap(),
            int_vector(&[0, 0, 1, 0, 0, 2])
        );

        let t = alg(AlgebraSpec::Torus(3));
        let full = Subalgebra::new(&t, Subspace::full(3)).unwrap();
        assert_eq!(find_regular(&t, &full).unwrap(), t.basis_vector(0));

        let g3 = alg(AlgebraSpec::Su(3));
        let line = Subalgebra::from_vectors(&g3, &[g3.basis_vector(6)]).unwrap();
        assert_eq!(find_regular(&g3, &line), Err(Error::NotCartan));
    }

    #[test]
    fn su2_roots() {
        let g = alg(AlgebraSpec::Su(2));
        let rd = root_decomposition(&g, &torus(&g)).unwrap();
        assert_eq!(rd.roots.len(), 2);
        let alpha = &rd.roots[0];
        assert_eq!(alpha.values, vec![GaussianRational::i()]);
        let v = add_vectors(
            &g.basis_vector(0),
            &scale_vector(&-GaussianRational::i(), &g.basis_vector(1)),
        );
        assert_eq!(alpha.space, Subspace::from_vectors(3, &[v]));
        assert_eq!(rd.negative(0), 1);
        assert_eq!(&rd.zero_space, torus(&g).space());
    }

    #[test]
    fn su3_and_torus_roots() {
        let g = alg(AlgebraSpec::Su(3));
        let rd = root_decomposition(&g, &torus(&g)).unwrap();
        assert_eq!(rd.roots.len(), 6);
        assert!(rd.roots.iter().all(|r| r.space.dim() == 1));
        assert_eq!(rd.zero_space.dim(), 2);

        let t = alg(AlgebraSpec::Torus(2));
        let full = Subalgebra::new(&t, Subspace::full(2)).unwrap();
        let rd = root_decomposition(&t, &full).unwrap();
        assert!(rd.roots.is_empty());
        assert_eq!(rd.zero_space, Subspace::full(2));
    }

    #[test]
    fn positive_system_counts() {
        for (spec, count) in [
            (AlgebraSpec::Su(2), 2),
            (AlgebraSpec::Su(3), 6),
            (AlgebraSpec::Sum(vec![AlgebraSpec::Su(2), AlgebraSpec::Su(2)]), 4),
            (AlgebraSpec::So(4), 4),
            (AlgebraSpec::So(5), 8),
            (AlgebraSpec::U(2), 2),
        ] {
            let g = alg(spec);
            let t = torus(&g);
            let rd = root_decomposition(&g, &t).unwrap();
            let systems = enumerate_positive_systems(&g, &rd, &t).unwrap();
            assert_eq!(systems.len(), count, "{}", g.name());
            for q in &systems {
                assert_eq!(2 * q.len(), rd.roots.len());
            }
        }
    }

    #[test]
    fn levi_mismatch() {
        let g = alg(AlgebraSpec::Su(3));
        let t = torus(&g);
        let rd = root_decomposition(&g, &t).unwrap();
        // a torus line plus one root direction pair is not a Levi factor of this shape
        let bad = Subalgebra::span(&g, Subspace::coordinate(8, &[0, 6, 7])).unwrap();
        assert!(matches!(
            enumerate_positive_systems(&g, &rd, &bad),
            Err(Error::LeviMismatch(_)) | Err(Error::NotClosed(_))
        ));
    }

    #[test]
    fn su2_borel() {
        let g = alg(AlgebraSpec::Su(2));
        let t = torus(&g);
        let rd = root_decomposition(&g, &t).unwrap();
        let p = build_parabolic(&g, &rd, &t, &[0]).unwrap();
        let v = add_vectors(
            &g.basis_vector(0),
            &scale_vector(&-GaussianRational::i(), &g.basis_vector(1)),
        );
        assert_eq!(
            p.nilradical.space(),
            &Subspace::from_vectors(3, std::slice::from_ref(&v))
        );
        assert_eq!(
            p.space.space(),
            &Subspace::from_vectors(3, &[g.basis_vector(2), v])
        );
        assert!(matches!(
            build_parabolic(&g, &rd, &t, &[0, 1]),
            Err(Error::ClosureFailure(_))
        ));
    }

    #[test]
    fn su3_borels_and_conjugation() {
        let g = alg(AlgebraSpec::Su(3));
        let t = torus(&g);
        let rd = root_decomposition(&g, &t).unwrap();
        let systems = enumerate_positive_systems(&g, &rd, &t).unwrap();
        for q in &systems {
            let p = build_parabolic(&g, &rd, &t, q).unwrap();
            assert_eq!(p.dim(), 5);
            assert_eq!(p.nilradical.dim(), 3);
            let neg: Vec<usize> = q.iter().map(|&a| rd.negative(a)).collect();
            let mut neg_sorted = neg.clone();
            neg_sorted.sort();
            let opposite = build_parabolic(&g, &rd, &t, &neg_sorted).unwrap();
            assert_eq!(p.space.space().conj(), *opposite.space.space());
        }
    }

    #[test]
    fn full_levi_gives_whole_algebra() {
        let g = alg(AlgebraSpec::Su(3));
        let t = torus(&g);
        let rd = root_decomposition(&g, &t).unwrap();
        let whole = Subalgebra::new(&g, Subspace::full(8)).unwrap();
        assert_eq!(
            enumerate_positive_systems(&g, &rd, &whole).unwrap(),
            vec![Vec::<usize>::new()]
        );
        let p = build_parabolic(&g, &rd, &whole, &[]).unwrap();
        assert_eq!(p.dim(), 8);
        assert!(p.nilradical.space().is_zero());
    }

    #[test]
    fn parabolics_from_abelian() {
        let g = alg(AlgebraSpec::Su(2));
        let t = torus(&g);
        let p = parabolic_from_abelian(&g, &t).unwrap();
        assert_eq!(p.levi_real.space(), t.space());
        let rd = root_decomposition(&g, &t).unwrap();
        assert_eq!(p.positive_set, vec![rd.negative(0)]);

        let g3 = alg(AlgebraSpec::Su(3));
        let p3 = parabolic_from_abelian(&g3, &torus(&g3)).unwrap();
        assert_eq!((p3.dim(), p3.nilradical.dim()), (5, 3));

        let u2 = alg(AlgebraSpec::U(2));
        let scalars = build_subalgebra(&u2, &SubalgebraSpec::Center).unwrap();
        let pu = parabolic_from_abelian(&u2, &scalars).unwrap();
        assert_eq!(pu.space.space(), &Subspace::full(4));
        assert_eq!(centralizer(&u2, scalars.space()).dim(), 4);
    }

    #[test]
    fn block_levi_in_su3() {
        let g = alg(AlgebraSpec::Su(3));
        let m = build_subalgebra(&g, &SubalgebraSpec::BlockU { k: 2 }).unwrap();
        let rd = root_decomposition(&g, &torus(&g)).unwrap();
        let systems = enumerate_positive_systems(&g, &rd, &m).unwrap();
        assert_eq!(systems.len(), 2);
        for q in systems {
            let p = build_parabolic(&g, &rd, &m, &q).unwrap();
            assert_eq!((p.dim(), p.nilradical.dim()), (6, 2));
        }
    }
}
