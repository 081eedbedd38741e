//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use invcx::catalog::{build, build_subalgebra, AlgebraSpec, SubalgebraSpec};
use invcx::cx::{
    all_passed, classify, compute_m, construct_j, decompose_j, integrable_by_closure, integrable_by_tensor,
    is_integrable, is_invariant, is_symmetric_pair, nijenhuis, nijenhuis_trials, plus_space, random_rational,
    standard_pairing, verify_structure, ComplexStructure, Reason, SymmetryVerdict, TorusComplexStructure,
};
use invcx::exact::matrix::{int_vector, unit_vector};
use invcx::exact::{GaussianRational, Matrix, Subspace};
use invcx::liealg::{center, centralizer, derived, is_solvable, LieAlgebra, Subalgebra};
use invcx::roots::{pairing_radical, Parabolic};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e:?}"))
}

struct Instance {
    name: &'static str,
    g: LieAlgebra,
    h: Subalgebra,
}

fn instance(name: &'static str, a: AlgebraSpec, s: SubalgebraSpec) -> Instance {
    let g = build(&a).expect("catalog algebra");
    let h = build_subalgebra(&g, &s).expect("catalog subalgebra");
    Instance { name, g, h }
}

fn su2() -> AlgebraSpec {
    AlgebraSpec::Su(2)
}

fn instances() -> Vec<Instance> {
    use AlgebraSpec::*;
    use SubalgebraSpec::*;
    vec![
        instance("su(2)/u(1)", su2(), MaximalTorus),
        instance("su(3)/t", Su(3), MaximalTorus),
        instance("su(3)/u(2)", Su(3), BlockU { k: 2 }),
        instance("su(2)+su(2)/0", Sum(vec![su2(), su2()]), Zero),
        instance("u(2)/0", U(2), Zero),
        instance("su(2)+torus(1)/0", Sum(vec![su2(), Torus(1)]), Zero),
    ]
}

/// Every parabolic of the instance with the standard fiber structure.
struct Constructed<'g> {
    parabolics: Vec<Parabolic>,
    j1: TorusComplexStructure,
    structures: Vec<ComplexStructure<'g>>,
}

fn constructed(inst: &Instance) -> Result<Constructed<'_>, String> {
    let r = ok(classify(&inst.g, &inst.h), inst.name)?;
    ensure!(r.exists, "{}: classify reports no structure", inst.name);
    let m = &r.m.as_ref().ok_or("missing m")?.m;
    let j1 = ok(TorusComplexStructure::standard(&inst.g, &inst.h, m), inst.name)?;
    let structures = r
        .parabolics
        .iter()
        .map(|p| ok(construct_j(&inst.g, &inst.h, p, &j1), inst.name))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Constructed {
        parabolics: r.parabolics,
        j1,
        structures,
    })
}

/// `J e_a = e_b`, `J e_b = −e_a` for each pair.
fn pairing(d: usize, pairs: &[(usize, usize)]) -> Matrix {
    let mut j = Matrix::zeros(d, d);
    for &(a, b) in pairs {
        j.set(b, a, GaussianRational::one());
        j.set(a, b, -GaussianRational::one());
    }
    j
}

fn zero(g: &LieAlgebra) -> Subalgebra {
    Subalgebra::new(g, Subspace::zero(g.dim())).unwrap()
}

fn flag_counts() -> Outcome {
    let start = Instant::now();
    let cases = [
        instance("su(3)/t", AlgebraSpec::Su(3), SubalgebraSpec::MaximalTorus),
        instance(
            "su(2)+su(2)/0",
            AlgebraSpec::Sum(vec![su2(), su2()]),
            SubalgebraSpec::Zero,
        ),
        instance("su(2)/u(1)", su2(), SubalgebraSpec::MaximalTorus),
    ];
    let expected = [(6, 0), (4, 2), (2, 0)];
    for (inst, (count, fiber)) in cases.iter().zip(expected) {
        let r = ok(classify(&inst.g, &inst.h), inst.name)?;
        ensure!(r.exists, "{}: no structure reported", inst.name);
        ensure!(
            r.parabolics.len() == count,
            "{}: {} parabolics, expected {count}",
            inst.name,
            r.parabolics.len()
        );
        ensure!(
            r.fiber_dim == Some(fiber),
            "{}: fiber_dim {:?}, expected {fiber}",
            inst.name,
            r.fiber_dim
        );
    }
    let elapsed = start.elapsed();
    let secs = elapsed.as_secs_f64();
    ensure!(elapsed < Duration::from_secs(5), "took {secs:.2}s");
    Ok(format!("6 / 4 (fiber 2) / 2 parabolics in {secs:.2}s"))
}

fn construction_soundness() -> Outcome {
    let mut total = 0;
    for inst in &instances() {
        let c = constructed(inst)?;
        for (k, j) in c.structures.iter().enumerate() {
            ensure!(is_invariant(j), "{} #{k}: not invariant", inst.name);
            let a = ok(integrable_by_tensor(j), inst.name)?;
            let b = ok(integrable_by_closure(j), inst.name)?;
            ensure!(a && b, "{} #{k}: tensor {a}, closure {b}", inst.name);
            ensure!(
                ok(is_integrable(j), inst.name)?,
                "{} #{k}: not integrable",
                inst.name
            );
            let ledger = ok(verify_structure(j), inst.name)?;
            if let Some(bad) = ledger.iter().find(|e| !e.passed) {
                return Err(format!("{} #{k}: {} ({})", inst.name, bad.name, bad.detail));
            }
            total += 1;
        }
    }
    Ok(format!(
        "{total} constructed structures over 6 pairs, all ledgers pass"
    ))
}

fn round_trips() -> Outcome {
    let mut total = 0;
    for inst in &instances() {
        let c = constructed(inst)?;
        for (k, j) in c.structures.iter().enumerate() {
            let d = ok(decompose_j(j), inst.name)?;
            ensure!(
                d.parabolic_index == k,
                "{} #{k}: decomposed to index {}",
                inst.name,
                d.parabolic_index
            );
            ensure!(
                d.parabolic == c.parabolics[k],
                "{} #{k}: parabolic differs",
                inst.name
            );
            ensure!(d.torus == c.j1, "{} #{k}: J1 differs", inst.name);
            total += 1;
        }
    }

    let g = build(&su2()).unwrap();
    let h = Subalgebra::from_vectors(&g, &[g.basis_vector(2)]).unwrap();
    let s2 = ComplexStructure::new(&g, &h, pairing(2, &[(0, 1)])).unwrap();
    let g2 = build(&AlgebraSpec::Sum(vec![su2(), su2()])).unwrap();
    let ce = ComplexStructure::new(&g2, &zero(&g2), pairing(6, &[(0, 1), (3, 4), (2, 5)])).unwrap();
    for (name, j) in [("S2", &s2), ("Calabi-Eckmann", &ce)] {
        let d = ok(decompose_j(j), name)?;
        let back = ok(construct_j(j.algebra(), j.h(), &d.parabolic, &d.torus), name)?;
        ensure!(back.matrix() == j.matrix(), "{name}: reconstruction differs");
    }
    Ok(format!(
        "{total} decompose(construct) + S2, Calabi-Eckmann construct(decompose)"
    ))
}

fn nijenhuis_well_defined() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut evaluations = 0;
    for inst in &instances() {
        let c = constructed(inst)?;
        for (k, j) in c.structures.iter().enumerate() {
            let t = ok(nijenhuis_trials(j, 20, &mut rng), inst.name)?;
            if let Some((what, a, b)) = t.failure {
                return Err(format!("{} #{k}: {what} on ({a}, {b})", inst.name));
            }
            evaluations += t.evaluations;
        }
    }
    ensure!(evaluations >= 500, "only {evaluations} evaluations");
    Ok(format!("{evaluations} evaluations, 20 perturbations per pair"))
}

fn canonical_m() -> Outcome {
    let mut total = 0;
    for inst in &instances() {
        let g = &inst.g;
        let c = constructed(inst)?;
        for (k, j) in c.structures.iter().enumerate() {
            let m = ok(compute_m(j), inst.name)?.m;
            ensure!(
                m.space().contains_subspace(inst.h.space()),
                "{} #{k}: h not in m",
                inst.name
            );
            let dm = ok(derived(g, &m), inst.name)?;
            let dh = ok(derived(g, &inst.h), inst.name)?;
            ensure!(dm.space() == dh.space(), "{} #{k}: [m,m] != [h,h]", inst.name);
            let zm = ok(center(g, &m), inst.name)?;
            ensure!(
                centralizer(g, zm.space()).space() == m.space(),
                "{} #{k}: m is not C(z(m))",
                inst.name
            );
            if inst.h.dim() == 0 {
                ensure!(m.is_abelian(g), "{} #{k}: m not abelian", inst.name);
                let l = ok(Subalgebra::new(g, ok(plus_space(j), inst.name)?), inst.name)?;
                ensure!(
                    ok(is_solvable(g, &l), inst.name)?,
                    "{} #{k}: l not solvable",
                    inst.name
                );
            }
            total += 1;
        }
    }
    Ok(format!("{total} structures"))
}

fn negative_controls() -> Outcome {
    let g = build(&su2()).unwrap();
    let r = ok(classify(&g, &zero(&g)), "su(2)/0")?;
    ensure!(
        !r.exists && r.reason == Reason::OddDimension,
        "su(2)/0: {:?}",
        r.reason
    );

    let g2 = build(&AlgebraSpec::Sum(vec![su2(), su2()])).unwrap();
    let swap = ComplexStructure::new(&g2, &zero(&g2), pairing(6, &[(0, 3), (1, 4), (2, 5)])).unwrap();
    let n = ok(nijenhuis(&swap, &unit_vector(6, 0), &unit_vector(6, 1)), "swap")?;
    ensure!(n == int_vector(&[0, 0, 1, 0, 0, -1]), "swap witness {n:?}");
    ensure!(!ok(is_integrable(&swap), "swap")?, "swap reported integrable");

    let g3 = build(&AlgebraSpec::Su(3)).unwrap();
    let t = build_subalgebra(&g3, &SubalgebraSpec::MaximalTorus).unwrap();
    let mixing = ComplexStructure::new(&g3, &t, pairing(6, &[(0, 1), (3, 4), (2, 5)])).unwrap();
    ensure!(!is_invariant(&mixing), "mixing J on su(3)/t reported invariant");
    Ok("odd dimension, swap witness (e3, -e3), non-invariant J".into())
}

fn symmetric_pairs() -> Outcome {
    use AlgebraSpec::Su;
    use SubalgebraSpec::{BlockU, MaximalTorus};
    let required = [
        "n abelian",
        "[τn, n] ⊆ h_C",
        "θ = id on h, −id on h⊥ is an automorphism",
    ];
    for inst in [
        instance("su(2)/u(1)", su2(), MaximalTorus),
        instance("su(3)/u(2)", Su(3), BlockU { k: 2 }),
    ] {
        let c = constructed(&inst)?;
        for (k, j) in c.structures.iter().enumerate() {
            let r = ok(is_symmetric_pair(j), inst.name)?;
            ensure!(
                r.verdict == SymmetryVerdict::Symmetric,
                "{} #{k}: {:?}",
                inst.name,
                r.verdict
            );
            ensure!(all_passed(&r.checks), "{} #{k}: failed check", inst.name);
            for name in required {
                ensure!(
                    r.checks.iter().any(|e| e.name == name),
                    "{}: no `{name}` check",
                    inst.name
                );
            }
        }
    }
    let inst = instance("su(3)/t", Su(3), MaximalTorus);
    let c = constructed(&inst)?;
    for (k, j) in c.structures.iter().enumerate() {
        let r = ok(is_symmetric_pair(j), inst.name)?;
        ensure!(
            matches!(r.verdict, SymmetryVerdict::NotApplicable(_)),
            "su(3)/t #{k}: {:?}",
            r.verdict
        );
    }
    Ok("su(2)/u(1), su(3)/u(2) symmetric; su(3)/t not applicable".into())
}

/// `{x ∈ p : κ(x, p) = 0}` with the Killing form of `g`.
fn killing_radical(g: &LieAlgebra, p: &Subspace) -> Subspace {
    let basis = p.basis_vectors();
    let gram: Vec<Vec<GaussianRational>> = basis
        .iter()
        .map(|x| basis.iter().map(|y| g.killing(x, y)).collect())
        .collect();
    let kernel = Matrix::from_rows(basis.len(), gram).kernel();
    Subspace::from_vectors(
        g.dim(),
        &kernel
            .basis_vectors()
            .iter()
            .map(|c| p.combine(c))
            .collect::<Vec<_>>(),
    )
}

fn random_invertible(d: usize, rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    loop {
        let rows = (0..d)
            .map(|_| (0..d).map(|_| random_rational(rng)).collect())
            .collect();
        let s = Matrix::from_rows(d, rows);
        if let Some(inv) = s.inverse() {
            return (s, inv);
        }
    }
}

fn oracle_agreement() -> Outcome {
    let mut parabolics = 0;
    for inst in &instances() {
        let g = &inst.g;
        let full = Subalgebra::new(g, Subspace::full(g.dim())).unwrap();
        let z = ok(center(g, &full), inst.name)?;
        let r = ok(classify(g, &inst.h), inst.name)?;
        for (k, p) in r.parabolics.iter().enumerate() {
            let n = p.nilradical.space();
            ensure!(
                &ok(pairing_radical(g, p.space.space()), inst.name)? == n,
                "{} #{k}: pairing radical differs from root nilradical",
                inst.name
            );
            let expected = ok(n.sum(z.space()), inst.name)?;
            ensure!(
                killing_radical(g, p.space.space()) == expected,
                "{} #{k}: Killing radical differs from n + z(g)",
                inst.name
            );
            parabolics += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut candidates, mut integrable) = (0, 0);
    let mut compare = |j: &ComplexStructure| -> Result<(), String> {
        let a = ok(integrable_by_tensor(j), "tensor")?;
        let b = ok(integrable_by_closure(j), "closure")?;
        ensure!(a == b, "methods disagree on {:?}", j.matrix());
        candidates += 1;
        integrable += usize::from(a);
        Ok(())
    };

    let g3 = build(&AlgebraSpec::Su(3)).unwrap();
    let t = build_subalgebra(&g3, &SubalgebraSpec::MaximalTorus).unwrap();
    for mask in 0..8u32 {
        let pairs: Vec<_> = (0..3)
            .map(|k| {
                if mask >> k & 1 == 0 {
                    (k, k + 3)
                } else {
                    (k + 3, k)
                }
            })
            .collect();
        let j = ComplexStructure::new(&g3, &t, pairing(6, &pairs)).unwrap();
        ensure!(is_invariant(&j), "sign choice {mask} not invariant");
        compare(&j)?;
    }

    use AlgebraSpec::{Sum, Torus, U};
    let flat = [
        instance("su(2)+su(2)/0", Sum(vec![su2(), su2()]), SubalgebraSpec::Zero),
        instance("u(2)/0", U(2), SubalgebraSpec::Zero),
        instance(
            "su(2)+torus(1)/0",
            Sum(vec![su2(), Torus(1)]),
            SubalgebraSpec::Zero,
        ),
        instance("torus(4)/0", Torus(4), SubalgebraSpec::Zero),
    ];
    for inst in &flat {
        let c = constructed(inst)?;
        let d = inst.g.dim();
        for _ in 0..40 {
            let (s, s_inv) = random_invertible(d, &mut rng);
            let j = s.mul(&standard_pairing(d)).mul(&s_inv);
            compare(&ok(ComplexStructure::new(&inst.g, &inst.h, j), inst.name)?)?;
        }
        // integrable ones with a random fiber structure
        let f = c.j1.fiber.dim();
        for k in 0..12 {
            let (s, s_inv) = random_invertible(f, &mut rng);
            let j1 = ok(
                TorusComplexStructure::new(
                    &inst.g,
                    &inst.h,
                    &c.j1.m,
                    s.mul(&standard_pairing(f)).mul(&s_inv),
                ),
                inst.name,
            )?;
            let p = &c.parabolics[k % c.parabolics.len()];
            compare(&ok(construct_j(&inst.g, &inst.h, p, &j1), inst.name)?)?;
        }
    }
    ensure!(candidates >= 200, "only {candidates} candidates");
    ensure!(
        integrable > 0 && integrable < candidates,
        "candidate set is one-sided"
    );
    Ok(format!(
        "{parabolics} nilradicals agree; {candidates} candidates ({integrable} integrable), no disagreement"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("flag counts", flag_counts),
        ("construction soundness", construction_soundness),
        ("round trips", round_trips),
        ("Nijenhuis well-definedness", nijenhuis_well_defined),
        ("canonical m", canonical_m),
        ("negative controls", negative_controls),
        ("symmetric pairs", symmetric_pairs),
        ("oracle agreement", oracle_agreement),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {} ({name}): PASS - {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL - {why}", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
