use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::catalog::build_subalgebra;
use crate::cx::{
    all_passed, classify, compute_m, construct_j, decompose_j, is_integrable, is_invariant,
    is_symmetric_pair, nijenhuis, nijenhuis_trials, plus_space, verify_structure, ComplexStructure, Ledger,
    LedgerEntry, SymmetryVerdict, TorusComplexStructure, SEMISIMPLICITY_ASSUMPTION,
};
use crate::error::Error;
use crate::exact::matrix::{is_zero_vector, unit_vector};
use crate::liealg::{LieAlgebra, Subalgebra};

use super::report;
use super::spec::{build_algebra, check_j_shape, parse, resolve, J1Choice, Problem, ProblemSpec};
use super::{exit, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    /// Describe the algebra: basis convention, brackets, inner product, torus.
    Catalog,
    /// Check the algebra axioms, the subalgebra and the shape of `j`.
    Validate,
    /// Invariance and integrability of `j`, with witnesses.
    Check,
    /// The canonical subalgebra `m` of `j`.
    M,
    /// Existence and parametrization of invariant complex structures on g/h.
    Classify,
    /// Build `J(p, J1)` from a parabolic index and a fiber structure.
    Construct,
    /// Recover `(p, J1)` from `j`.
    Decompose,
    /// Full structural ledger of `j` plus randomized Nijenhuis trials.
    Verify,
    /// Hermitian-symmetric pair detection.
    Symmetric,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Catalog => "catalog",
            Command::Validate => "validate",
            Command::Check => "check",
            Command::M => "m",
            Command::Classify => "classify",
            Command::Construct => "construct",
            Command::Decompose => "decompose",
            Command::Verify => "verify",
            Command::Symmetric => "symmetric",
        }
    }
}

/// Command-line overrides of spec fields.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub parabolic_index: Option<usize>,
    pub j1: Option<J1Choice>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit: u8,
}

/// Random lift perturbations per Nijenhuis evaluation in `verify`.
const PERTURBATIONS: usize = 20;

type Body = (Map<String, Value>, u8);

fn put(map: &mut Map<String, Value>, key: &str, value: Value) {
    map.insert(key.into(), value);
}

fn error_report(command: Command, e: &CliError) -> Outcome {
    let mut err = Map::new();
    put(&mut err, "kind", json!(e.kind()));
    put(&mut err, "message", json!(e.to_string()));
    if let CliError::Parse { path, line, .. } = e {
        put(&mut err, "path", json!(path));
        if let Some((l, c)) = line {
            put(&mut err, "line", json!(l));
            put(&mut err, "column", json!(c));
        }
    }
    Outcome {
        report: json!({ "command": command.name(), "error": Value::Object(err) }),
        exit: e.exit_code(),
    }
}

/// Parses `text` and runs `command`; every failure becomes a report.
pub fn run_text(command: Command, text: &str, opts: &Options) -> Outcome {
    match parse(text) {
        Ok(spec) => run(command, &spec, opts),
        Err(e) => error_report(command, &e),
    }
}

pub fn run(command: Command, spec: &ProblemSpec, opts: &Options) -> Outcome {
    let result = if command == Command::Validate {
        validate(spec)
    } else {
        resolve(spec).and_then(|p| dispatch(command, &p, opts))
    };
    match result {
        Ok((body, code)) => {
            let mut out = Map::new();
            put(&mut out, "command", json!(command.name()));
            out.extend(body);
            Outcome {
                report: Value::Object(out),
                exit: code,
            }
        }
        Err(e) => error_report(command, &e),
    }
}

fn header(g: &LieAlgebra, h: Option<&Subalgebra>) -> Map<String, Value> {
    let mut m = Map::new();
    put(&mut m, "algebra", report::algebra(g));
    if let Some(h) = h {
        put(&mut m, "subalgebra", report::subspace(h.space()));
        put(&mut m, "quotient_dim", json!(g.dim() - h.dim()));
    }
    m
}

fn dispatch(command: Command, p: &Problem, opts: &Options) -> Result<Body, CliError> {
    let g = &p.algebra;
    match command {
        Command::Catalog => catalog(g),
        Command::Validate => unreachable!("handled before resolution"),
        Command::Classify => {
            let h = p.require_subalgebra()?;
            let r = classify(g, h)?;
            let mut body = header(g, Some(h));
            if let Value::Object(c) = report::classification(&r) {
                body.extend(c);
            }
            let code = if r.exists { exit::YES } else { exit::NO };
            Ok((body, code))
        }
        Command::Construct => construct(p, opts),
        _ => {
            let h = p.require_subalgebra()?;
            let j = structure(g, h, p)?;
            let mut body = header(g, Some(h));
            put(&mut body, "j", report::matrix(j.matrix()));
            if command == Command::Check {
                return check(&j, body);
            }
            if let Some(no) = precondition(&j, &mut body)? {
                return Ok(no);
            }
            match command {
                Command::M => {
                    let md = compute_m(&j)?;
                    put(&mut body, "fiber_dim", json!(md.m.dim() - h.dim()));
                    if let Value::Object(m) = report::mdata(&md) {
                        body.extend(m);
                    }
                    Ok((body, exit::YES))
                }
                Command::Decompose => {
                    let d = decompose_j(&j)?;
                    put(&mut body, "parabolic_index", json!(d.parabolic_index));
                    put(&mut body, "j1", report::matrix(&d.torus.j1));
                    put(&mut body, "fiber_dim", json!(d.torus.dim()));
                    put(&mut body, "m", report::mdata(&d.m));
                    put(&mut body, "root_datum", report::roots(&d.datum));
                    put(
                        &mut body,
                        "parabolic",
                        report::parabolic(d.parabolic_index, &d.parabolic),
                    );
                    Ok((body, exit::YES))
                }
                Command::Verify => verify(&j, opts.seed, body),
                Command::Symmetric => symmetric(&j, body),
                _ => unreachable!("remaining commands handled above"),
            }
        }
    }
}

fn structure<'g>(g: &'g LieAlgebra, h: &Subalgebra, p: &Problem) -> Result<ComplexStructure<'g>, CliError> {
    let j = p.require_j()?;
    ComplexStructure::new(g, h, j.clone()).map_err(|e| match e {
        Error::NotComplexStructure(m) => CliError::Validation(format!("j: {m}")),
        other => CliError::Math(other),
    })
}

fn catalog(g: &LieAlgebra) -> Result<Body, CliError> {
    let mut body = header(g, None);
    put(&mut body, "brackets", report::brackets(g));
    put(&mut body, "inner_product", report::matrix(g.inner_product()));
    let torus = build_subalgebra(g, &crate::catalog::SubalgebraSpec::MaximalTorus)?;
    put(&mut body, "maximal_torus", report::subspace(torus.space()));
    Ok((body, exit::YES))
}

fn validate(spec: &ProblemSpec) -> Result<Body, CliError> {
    let mut checks = Ledger::new();
    let mut body = Map::new();
    let finish = |mut body: Map<String, Value>, checks: Ledger| {
        let ok = all_passed(&checks);
        put(&mut body, "valid", json!(ok));
        put(&mut body, "checks", report::ledger(&checks));
        (body, if ok { exit::YES } else { exit::NO })
    };
    let g = match build_algebra(&spec.algebra) {
        Ok(g) => g,
        Err(e) => {
            checks.push(LedgerEntry::new("algebra axioms", false, e.to_string()));
            return Ok(finish(body, checks));
        }
    };
    checks.push(LedgerEntry::new(
        "algebra axioms",
        true,
        "antisymmetry, Jacobi, invariant positive-definite inner product",
    ));
    body.extend(header(&g, None));
    let Some(hs) = &spec.subalgebra else {
        return Ok(finish(body, checks));
    };
    let h = match build_subalgebra(&g, hs) {
        Ok(h) => h,
        Err(e) => {
            checks.push(LedgerEntry::new("subalgebra", false, e.to_string()));
            return Ok(finish(body, checks));
        }
    };
    checks.push(LedgerEntry::new(
        "subalgebra closed",
        true,
        format!("dim h = {}", h.dim()),
    ));
    body.extend(header(&g, Some(&h)));
    if let Some(j) = &spec.j {
        let d = g.dim() - h.dim();
        if let Err(e) = check_j_shape("j", j, d, "the quotient g/h") {
            checks.push(LedgerEntry::new("j shape", false, e.to_string()));
            return Ok(finish(body, checks));
        }
        checks.push(LedgerEntry::new("j shape", true, format!("{d}x{d}")));
        match ComplexStructure::new(&g, &h, j.clone()) {
            Ok(cs) => {
                checks.push(LedgerEntry::new("j squares to -1", true, ""));
                checks.push(LedgerEntry::new("j h-invariant", is_invariant(&cs), ""));
            }
            Err(e) => checks.push(LedgerEntry::new("j squares to -1", false, e.to_string())),
        }
    }
    Ok(finish(body, checks))
}

fn invariance_witness(j: &ComplexStructure) -> Value {
    let g = j.algebra();
    for (k, x) in j.h().basis_vectors().iter().enumerate() {
        let c = j.quotient().induced_ad(g, x).commutator(j.matrix());
        if !c.is_zero() {
            return json!({ "h_basis_index": k, "commutator": report::matrix(&c) });
        }
    }
    Value::Null
}

fn nijenhuis_witness(j: &ComplexStructure) -> Result<Value, CliError> {
    let d = j.dim();
    for a in 0..d {
        for b in (a + 1)..d {
            let n = nijenhuis(j, &unit_vector(d, a), &unit_vector(d, b))?;
            if !is_zero_vector(&n) {
                return Ok(json!({ "u": a, "v": b, "value": report::vector(&n) }));
            }
        }
    }
    Ok(Value::Null)
}

fn check(j: &ComplexStructure, mut body: Map<String, Value>) -> Result<Body, CliError> {
    let invariant = is_invariant(j);
    put(&mut body, "invariant", json!(invariant));
    put(&mut body, "invariance_witness", invariance_witness(j));
    if !invariant {
        put(&mut body, "integrable", Value::Null);
        put(&mut body, "nijenhuis_witness", Value::Null);
        return Ok((body, exit::NO));
    }
    let integrable = is_integrable(j)?;
    put(&mut body, "integrable", json!(integrable));
    put(&mut body, "nijenhuis_witness", nijenhuis_witness(j)?);
    Ok((body, if integrable { exit::YES } else { exit::NO }))
}

/// Reports a clean "no" when `j` is not invariant or not integrable.
fn precondition(j: &ComplexStructure, body: &mut Map<String, Value>) -> Result<Option<Body>, CliError> {
    let invariant = is_invariant(j);
    let integrable = invariant && is_integrable(j)?;
    if invariant && integrable {
        return Ok(None);
    }
    put(body, "invariant", json!(invariant));
    put(body, "integrable", json!(integrable));
    put(
        body,
        "reason",
        json!(if invariant {
            "j is not integrable"
        } else {
            "j is not h-invariant"
        }),
    );
    Ok(Some((body.clone(), exit::NO)))
}

fn construct(p: &Problem, opts: &Options) -> Result<Body, CliError> {
    let g = &p.algebra;
    let h = p.require_subalgebra()?;
    let r = classify(g, h)?;
    let mut body = header(g, Some(h));
    put(&mut body, "exists", json!(r.exists));
    put(&mut body, "reason", json!(r.reason.as_str()));
    if !r.exists {
        return Ok((body, exit::NO));
    }
    let count = r.parabolics.len();
    let index = opts.parabolic_index.or(p.parabolic_index).unwrap_or(0);
    if index >= count {
        return Err(CliError::Validation(format!(
            "parabolic_index {index} out of range: {count} parabolics"
        )));
    }
    let m = &r.m.as_ref().expect("present when a structure exists").m;
    let choice = opts
        .j1
        .clone()
        .or_else(|| p.j1.clone())
        .unwrap_or(J1Choice::Default);
    let j1 = match choice {
        J1Choice::Default => TorusComplexStructure::standard(g, h, m)?,
        J1Choice::Matrix(mx) => {
            let fiber = m.dim() - h.dim();
            check_j_shape("j1", &mx, fiber, "the fiber m/h")?;
            TorusComplexStructure::new(g, h, m, mx).map_err(|e| CliError::Validation(format!("j1: {e}")))?
        }
    };
    let parabolic = &r.parabolics[index];
    let j = construct_j(g, h, parabolic, &j1)?;
    let ledger = verify_structure(&j)?;
    let ok = all_passed(&ledger);
    put(&mut body, "parabolic_count", json!(count));
    put(&mut body, "parabolic_index", json!(index));
    put(&mut body, "parabolic", report::parabolic(index, parabolic));
    put(&mut body, "fiber_dim", json!(j1.dim()));
    put(&mut body, "j1", report::matrix(&j1.j1));
    put(&mut body, "j", report::matrix(j.matrix()));
    put(&mut body, "plus_space", report::subspace(&plus_space(&j)?));
    put(&mut body, "ledger", report::ledger(&ledger));
    Ok((body, if ok { exit::YES } else { exit::THEOREM }))
}

fn verify(j: &ComplexStructure, seed: u64, mut body: Map<String, Value>) -> Result<Body, CliError> {
    let mut ledger = verify_structure(j)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = nijenhuis_trials(j, PERTURBATIONS, &mut rng)?;
    ledger.extend(trials.ledger_entries());
    let ok = all_passed(&ledger);
    put(&mut body, "seed", json!(seed));
    put(&mut body, "nijenhuis_evaluations", json!(trials.evaluations));
    put(&mut body, "all_passed", json!(ok));
    put(&mut body, "ledger", report::ledger(&ledger));
    Ok((body, if ok { exit::YES } else { exit::THEOREM }))
}

fn symmetric(j: &ComplexStructure, mut body: Map<String, Value>) -> Result<Body, CliError> {
    let r = is_symmetric_pair(j)?;
    let (verdict, reason) = match &r.verdict {
        SymmetryVerdict::Symmetric => ("symmetric", Value::Null),
        SymmetryVerdict::NotSymmetric(why) => ("not_symmetric", json!(why)),
        SymmetryVerdict::NotApplicable(why) => ("not_applicable", json!(why)),
    };
    put(&mut body, "verdict", json!(verdict));
    put(&mut body, "reason", reason);
    put(&mut body, "commutant_dim", json!(r.commutant_dim));
    put(&mut body, "assumption", json!(SEMISIMPLICITY_ASSUMPTION));
    put(&mut body, "checks", report::ledger(&r.checks));
    let code = if r.verdict == SymmetryVerdict::Symmetric {
        exit::YES
    } else {
        exit::NO
    };
    Ok((body, code))
}
