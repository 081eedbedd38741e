//! JSON rendering. Rationals are strings `"p/q"`; complex entries are
//! `{"re": "..", "im": ".."}`. A matrix or subspace uses the complex form
//! exactly when one of its entries is non-real.

use serde_json::{json, Map, Value};

use crate::cx::{ClassificationReport, LedgerEntry, MData};
use crate::exact::{format_rational, GaussianRational, Matrix, Subspace};
use crate::liealg::LieAlgebra;
use crate::roots::{Parabolic, RootDatum};

pub fn gaussian(z: &GaussianRational) -> Value {
    json!({ "re": format_rational(z.re()), "im": format_rational(z.im()) })
}

fn entry(z: &GaussianRational, complex: bool) -> Value {
    if complex {
        gaussian(z)
    } else {
        Value::String(format_rational(z.re()))
    }
}

pub fn vector(v: &[GaussianRational]) -> Value {
    let complex = v.iter().any(|z| !z.is_real());
    Value::Array(v.iter().map(|z| entry(z, complex)).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    let complex = !m.is_real();
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(|z| entry(z, complex)).collect()))
            .collect(),
    )
}

pub fn subspace(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": matrix(s.basis()) })
}

pub fn ledger(entries: &[LedgerEntry]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|e| json!({ "name": e.name, "passed": e.passed, "detail": e.detail }))
            .collect(),
    )
}

pub fn algebra(g: &LieAlgebra) -> Value {
    let mut obj = Map::new();
    obj.insert("name".into(), json!(g.name()));
    obj.insert("dim".into(), json!(g.dim()));
    if let Some(spec) = g.catalog_spec() {
        obj.insert("rank".into(), json!(spec.rank()));
        obj.insert("basis_convention".into(), json!(spec.basis_convention()));
    } else {
        obj.insert("basis_convention".into(), json!("explicit structure constants"));
    }
    Value::Object(obj)
}

pub fn brackets(g: &LieAlgebra) -> Value {
    let n = g.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if g.basis_bracket(i, j).is_empty() {
                continue;
            }
            out.push(json!({ "i": i, "j": j, "value": vector(&g.bracket(&g.basis_vector(i), &g.basis_vector(j))) }));
        }
    }
    Value::Array(out)
}

pub fn mdata(md: &MData) -> Value {
    json!({
        "m": subspace(md.m.space()),
        "u": subspace(&md.u),
        "center_m": subspace(md.center_m.space()),
    })
}

pub fn roots(rd: &RootDatum) -> Value {
    json!({
        "cartan": subspace(rd.cartan.space()),
        "regular_element": vector(&rd.regular),
        "roots": rd.roots.iter().enumerate().map(|(k, r)| json!({
            "index": k,
            "values": r.values.iter().map(gaussian).collect::<Vec<_>>(),
            "space": subspace(&r.space),
        })).collect::<Vec<_>>(),
    })
}

pub fn parabolic(index: usize, p: &Parabolic) -> Value {
    json!({
        "index": index,
        "positive_set": p.positive_set,
        "dim": p.dim(),
        "nilradical_dim": p.nilradical.dim(),
        "space": subspace(p.space.space()),
        "nilradical": subspace(p.nilradical.space()),
    })
}

pub fn classification(r: &ClassificationReport) -> Value {
    json!({
        "exists": r.exists,
        "reason": r.reason.as_str(),
        "quotient_dim": r.quotient_dim,
        "m": r.m.as_ref().map(mdata),
        "fiber_dim": r.fiber_dim,
        "root_datum": r.datum.as_ref().map(roots),
        "parabolic_count": r.parabolics.len(),
        "parabolics": r.parabolics.iter().enumerate().map(|(k, p)| parabolic(k, p)).collect::<Vec<_>>(),
        "structure_count_note": r.structure_count_note,
        "ledger": ledger(&r.ledger),
    })
}
