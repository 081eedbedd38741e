use crate::error::{Error, Result};
use crate::liealg::{
    center, centralizer, derived, extend_to_maximal_abelian_within, is_solvable, normalizer_of_space,
    radical, LieAlgebra, Subalgebra,
};
use crate::roots::{build_parabolic, enumerate_positive_systems, root_decomposition, Parabolic, RootDatum};

use super::canonical::{
    cartan_for_levi, compute_m, construct_j, decompose_j, levi_data, preferred_torus, MData,
};
use super::structure::{plus_space, require_integrable, ComplexStructure, TorusComplexStructure};

/// One named check and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl LedgerEntry {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

pub type Ledger = Vec<LedgerEntry>;

pub fn all_passed(ledger: &[LedgerEntry]) -> bool {
    ledger.iter().all(|e| e.passed)
}

/// Why `g/h` does or does not carry an invariant integrable complex structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    Exists,
    OddDimension,
    DerivedMismatch,
    NotCentralizer,
    OddFiber,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::Exists => "exists",
            Reason::OddDimension => "odd_dimension",
            Reason::DerivedMismatch => "derived_mismatch",
            Reason::NotCentralizer => "not_a_centralizer",
            Reason::OddFiber => "odd_fiber",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub exists: bool,
    pub reason: Reason,
    pub quotient_dim: usize,
    /// Candidate `m = t + h`, present whenever `dim g/h` is even.
    pub m: Option<MData>,
    pub datum: Option<RootDatum>,
    pub parabolics: Vec<Parabolic>,
    pub fiber_dim: Option<usize>,
    pub structure_count_note: String,
    pub ledger: Ledger,
}

/// `t` maximal abelian in `C_g(h)`, seeded with the part of the catalog torus
/// that centralizes `h`; returns `m = t + h`.
pub fn candidate_levi(g: &LieAlgebra, h: &Subalgebra) -> Result<Subalgebra> {
    let c = centralizer(g, h.space());
    let seed = match preferred_torus(g) {
        Some(t) => t.intersection(c.space())?,
        None => crate::exact::Subspace::zero(g.dim()),
    };
    let seed = Subalgebra::new(g, seed)?;
    let t = extend_to_maximal_abelian_within(g, &c, &seed)?;
    Subalgebra::new(g, t.space().sum(h.space())?)
        .map_err(|_| Error::TheoremViolation("t + h is not a subalgebra".into()))
}

fn count_note(count: usize, fiber: usize) -> String {
    let base = format!(
        "{count} parabolic subalgebra{} with Levi factor m, counted relative to the chosen Cartan subalgebra",
        if count == 1 { "" } else { "s" }
    );
    if fiber == 0 {
        format!("{base}; m/h is a point, so each parabolic gives exactly one complex structure")
    } else {
        format!(
            "{base}; each combines with any complex structure on the {fiber}-dimensional abelian fiber m/h (a continuous family)"
        )
    }
}

/// Existence and parametrization of invariant integrable complex structures on `g/h`.
pub fn classify(g: &LieAlgebra, h: &Subalgebra) -> Result<ClassificationReport> {
    h.require_closed()?;
    let d = g.dim() - h.dim();
    let mut ledger = vec![LedgerEntry::new(
        "dim g/h even",
        d.is_multiple_of(2),
        format!("dim g/h = {d}"),
    )];
    let mut report = ClassificationReport {
        exists: false,
        reason: Reason::OddDimension,
        quotient_dim: d,
        m: None,
        datum: None,
        parabolics: Vec::new(),
        fiber_dim: None,
        structure_count_note: String::new(),
        ledger: Vec::new(),
    };
    if d % 2 == 1 {
        report.structure_count_note = "no invariant complex structure: odd-dimensional quotient".into();
        report.ledger = ledger;
        return Ok(report);
    }

    let m = candidate_levi(g, h)?;
    let fiber = m.dim() - h.dim();
    report.fiber_dim = Some(fiber);
    let derived_ok = derived(g, &m)?.space() == derived(g, h)?.space();
    let z = center(g, &m)?;
    let centralizer_ok = centralizer(g, z.space()).space() == m.space();
    ledger.push(LedgerEntry::new("h ⊆ m", true, format!("dim m = {}", m.dim())));
    ledger.push(LedgerEntry::new("[m,m] = [h,h]", derived_ok, ""));
    ledger.push(LedgerEntry::new(
        "m = C_g(z(m))",
        centralizer_ok,
        format!("dim z(m) = {}", z.dim()),
    ));
    ledger.push(LedgerEntry::new(
        "dim m/h even",
        fiber.is_multiple_of(2),
        format!("dim m/h = {fiber}"),
    ));
    let reason = if !derived_ok {
        Reason::DerivedMismatch
    } else if !centralizer_ok {
        Reason::NotCentralizer
    } else if fiber % 2 == 1 {
        Reason::OddFiber
    } else {
        Reason::Exists
    };
    report.reason = reason;
    if reason != Reason::Exists {
        report.structure_count_note = format!("no invariant complex structure: {}", reason.as_str());
        report.ledger = ledger;
        return Ok(report);
    }

    let md = levi_data(g, h, m.clone())?;
    let cartan = cartan_for_levi(g, &m)?;
    let datum = root_decomposition(g, &cartan)?;
    let systems = enumerate_positive_systems(g, &datum, &m)?;
    let parabolics = systems
        .iter()
        .map(|q| build_parabolic(g, &datum, &m, q))
        .collect::<Result<Vec<_>>>()?;
    ledger.push(LedgerEntry::new(
        "parabolics with Levi factor m exist",
        !parabolics.is_empty(),
        format!("{} found", parabolics.len()),
    ));

    let j1 = TorusComplexStructure::standard(g, h, &m)?;
    for (idx, p) in parabolics.iter().enumerate() {
        let j = construct_j(g, h, p, &j1)?;
        let back = decompose_j(&j)?;
        let round_trip = back.parabolic_index == idx && back.torus == j1;
        ledger.push(LedgerEntry::new(
            format!("parabolic {idx}: J(p, J1) integrable, invariant and recovered"),
            round_trip,
            format!("recovered index {}", back.parabolic_index),
        ));
    }

    report.exists = true;
    report.structure_count_note = count_note(parabolics.len(), fiber);
    report.m = Some(md);
    report.datum = Some(datum);
    report.parabolics = parabolics;
    report.ledger = ledger;
    Ok(report)
}

fn equal_entry(name: &str, ok: bool, left: usize, right: usize) -> LedgerEntry {
    LedgerEntry::new(name, ok, format!("{left} vs {right}"))
}

/// Structural identities satisfied by every integrable invariant `J`.
pub fn verify_structure(j: &ComplexStructure) -> Result<Ledger> {
    require_integrable(j)?;
    let g = j.algebra();
    let h = j.h();
    let n = g.dim();
    let dh = h.dim();
    let l = plus_space(j)?;
    let tl = l.conj();
    let mut ledger = Ledger::new();

    let l_real = l.real_points();
    let real_sum = n + 2 * l.dim() - l_real.dim();
    ledger.push(equal_entry("g_C = g + l", real_sum == 2 * n, real_sum, 2 * n));
    let sum = l.sum(&tl)?;
    ledger.push(equal_entry("g_C = l + τl", sum.dim() == n, sum.dim(), n));
    let cap = l.intersection(&tl)?;
    ledger.push(equal_entry("h_C = l ∩ τl", &cap == h.space(), cap.dim(), dh));
    ledger.push(equal_entry("l ∩ g = h", &l_real == h.space(), l_real.dim(), dh));
    ledger.push(equal_entry(
        "dim_C l = (dim g + dim h)/2",
        2 * l.dim() == n + dh,
        l.dim(),
        (n + dh) / 2,
    ));

    let l_alg = Subalgebra::new(g, l.clone())?;
    let r = radical(g, &l_alg)?;
    let c_h = center(g, h)?;
    let r_prime = r.dim() as isize - c_h.dim() as isize;
    ledger.push(LedgerEntry::new(
        "dim r' = (dim g - dim h)/2",
        2 * r_prime == (n - dh) as isize,
        format!("dim r = {}, dim c_h = {}", r.dim(), c_h.dim()),
    ));
    let k = derived(g, h)?;
    let split = r.space().intersection(k.space())?.is_zero() && r.space().sum(k.space())? == l;
    ledger.push(LedgerEntry::new(
        "l = r ⊕ [h,h]_C",
        split,
        format!("dim r = {}, dim [h,h] = {}", r.dim(), k.dim()),
    ));

    let md = compute_m(j)?;
    let p = normalizer_of_space(g, &l).into_space();
    let p_cap = p.intersection(&p.conj())?;
    ledger.push(equal_entry(
        "p ∩ τp = m_C",
        &p_cap == md.m.space(),
        p_cap.dim(),
        md.m.dim(),
    ));
    let u_cap_l = md.u.intersection(&l)?.real_points();
    let u_plus_l = p.contains_subspace(&md.u)
        && p.contains_subspace(&l)
        && u_cap_l.is_zero()
        && md.u.dim() + 2 * l.dim() == 2 * p.dim();
    ledger.push(LedgerEntry::new(
        "p = u ⊕ l over R",
        u_plus_l,
        format!(
            "dim u = {}, dim_C l = {}, dim_C p = {}",
            md.u.dim(),
            l.dim(),
            p.dim()
        ),
    ));

    let dec = decompose_j(j)?;
    let fiber_plus = j.quotient().preimage(&dec.torus.plus_space());
    let splitting = fiber_plus.sum(dec.parabolic.nilradical.space())? == l
        && fiber_plus
            .intersection(dec.parabolic.nilradical.space())?
            .is_zero();
    ledger.push(LedgerEntry::new("l = p⁻¹((m/h)₊) ⊕ n", splitting, ""));

    if dh == 0 {
        let solvable = is_solvable(g, &l_alg)?;
        ledger.push(LedgerEntry::new("l solvable (h = 0)", solvable, ""));
    }
    Ok(ledger)
}
