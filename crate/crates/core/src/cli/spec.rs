use serde::de::Error as _;
use serde::{Deserialize, Deserializer};
use serde_json::Value;

use crate::catalog::{build, build_subalgebra, AlgebraSpec, SubalgebraSpec};
use crate::error::Error;
use crate::exact::scalar::rat;
use crate::exact::{parse_rational, GaussianRational, Matrix, Rational};
use crate::liealg::{first_nonpositive_pivot, LieAlgebra, Subalgebra};

use super::CliError;

/// `[e_i, e_j] = Σ_k value[k] e_k`; the `[e_j, e_i]` entry is implied.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub value: Vec<String>,
}

/// Structure constants given directly. Without `inner_product` the negative
/// Killing form is used, which must then be positive definite.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitAlgebra {
    #[serde(default = "explicit_name")]
    pub name: String,
    pub dim: usize,
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub inner_product: Option<Vec<Vec<String>>>,
}

fn explicit_name() -> String {
    "explicit".into()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraInput {
    Catalog(AlgebraSpec),
    Explicit(ExplicitAlgebra),
}

impl<'de> Deserialize<'de> for AlgebraInput {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut v = Value::deserialize(d)?;
        if v.get("kind").and_then(Value::as_str) == Some("explicit") {
            if let Some(obj) = v.as_object_mut() {
                obj.remove("kind");
            }
            serde_json::from_value(v)
                .map(AlgebraInput::Explicit)
                .map_err(D::Error::custom)
        } else {
            serde_json::from_value(v)
                .map(AlgebraInput::Catalog)
                .map_err(D::Error::custom)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum J1Choice {
    Default,
    Matrix(Matrix),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawJ1 {
    Name(String),
    Matrix(Vec<Vec<String>>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    algebra: AlgebraInput,
    #[serde(default)]
    subalgebra: Option<SubalgebraSpec>,
    #[serde(default)]
    j: Option<Vec<Vec<String>>>,
    #[serde(default)]
    parabolic_index: Option<usize>,
    #[serde(default)]
    j1: Option<RawJ1>,
}

/// A parsed problem file; rational literals are already exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    pub algebra: AlgebraInput,
    pub subalgebra: Option<SubalgebraSpec>,
    pub j: Option<Matrix>,
    pub parabolic_index: Option<usize>,
    pub j1: Option<J1Choice>,
}

fn literal(field: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).ok_or_else(|| CliError::Parse {
        path: field.into(),
        line: None,
        message: format!("malformed rational {s:?}"),
    })
}

/// Parses a row-major matrix of rational strings; rows must be equally long.
pub fn parse_matrix(field: &str, rows: &[Vec<String>]) -> Result<Matrix, CliError> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        if row.len() != cols {
            return Err(CliError::Validation(format!(
                "{field}: row {r} has {} entries, expected {cols}",
                row.len()
            )));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(c, s)| literal(&format!("{field}[{r}][{c}]"), s).map(GaussianRational::real))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(parsed);
    }
    Ok(Matrix::from_rows(cols, out))
}

fn check_literals(spec: &RawSpec) -> Result<(), CliError> {
    if let AlgebraInput::Explicit(e) = &spec.algebra {
        for (n, b) in e.brackets.iter().enumerate() {
            for (k, s) in b.value.iter().enumerate() {
                literal(&format!("algebra.brackets[{n}].value[{k}]"), s)?;
            }
        }
        if let Some(ip) = &e.inner_product {
            parse_matrix("algebra.inner_product", ip)?;
        }
    }
    if let Some(SubalgebraSpec::Span { basis }) = &spec.subalgebra {
        for (r, row) in basis.iter().enumerate() {
            for (c, s) in row.iter().enumerate() {
                literal(&format!("subalgebra.basis[{r}][{c}]"), s)?;
            }
        }
    }
    Ok(())
}

pub fn parse_j1(field: &str, value: Value) -> Result<J1Choice, CliError> {
    let raw: RawJ1 = serde_json::from_value(value).map_err(|e| CliError::Parse {
        path: field.into(),
        line: None,
        message: e.to_string(),
    })?;
    convert_j1(field, raw)
}

fn convert_j1(field: &str, raw: RawJ1) -> Result<J1Choice, CliError> {
    match raw {
        RawJ1::Name(s) if s == "default" => Ok(J1Choice::Default),
        RawJ1::Name(s) => Err(CliError::Parse {
            path: field.into(),
            line: None,
            message: format!("expected \"default\" or a matrix, found {s:?}"),
        }),
        RawJ1::Matrix(rows) => Ok(J1Choice::Matrix(parse_matrix(field, &rows)?)),
    }
}

/// Strict parse: unknown fields are rejected and every rational literal is
/// checked.
pub fn parse(text: &str) -> Result<ProblemSpec, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawSpec = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        CliError::Parse {
            path,
            line: Some((inner.line(), inner.column())),
            message: inner.to_string(),
        }
    })?;
    check_literals(&raw)?;
    let j = raw.j.as_ref().map(|rows| parse_matrix("j", rows)).transpose()?;
    let j1 = raw.j1.map(|r| convert_j1("j1", r)).transpose()?;
    Ok(ProblemSpec {
        algebra: raw.algebra,
        subalgebra: raw.subalgebra,
        j,
        parabolic_index: raw.parabolic_index,
        j1,
    })
}

/// A problem with the algebra built and every dimension checked.
#[derive(Debug, Clone)]
pub struct Problem {
    pub algebra: LieAlgebra,
    pub subalgebra: Option<Subalgebra>,
    pub j: Option<Matrix>,
    pub parabolic_index: Option<usize>,
    pub j1: Option<J1Choice>,
}

impl Problem {
    pub fn require_subalgebra(&self) -> Result<&Subalgebra, CliError> {
        self.subalgebra
            .as_ref()
            .ok_or_else(|| CliError::Validation("this command needs a subalgebra".into()))
    }

    pub fn require_j(&self) -> Result<&Matrix, CliError> {
        self.j
            .as_ref()
            .ok_or_else(|| CliError::Validation("this command needs a matrix j".into()))
    }
}

fn invalid(e: Error) -> CliError {
    CliError::Validation(e.to_string())
}

pub fn build_explicit(e: &ExplicitAlgebra) -> Result<LieAlgebra, CliError> {
    let n = e.dim;
    let mut c = vec![rat(0); n * n * n];
    for (idx, b) in e.brackets.iter().enumerate() {
        if b.i >= n || b.j >= n || b.value.len() != n {
            return Err(CliError::Validation(format!(
                "algebra.brackets[{idx}]: indices must be < {n} and value must have {n} entries"
            )));
        }
        for (k, s) in b.value.iter().enumerate() {
            let v = literal("algebra.brackets", s)?;
            c[(b.i * n + b.j) * n + k] = v.clone();
            c[(b.j * n + b.i) * n + k] = -v;
        }
    }
    let ip = match &e.inner_product {
        Some(rows) => {
            let m = parse_matrix("algebra.inner_product", rows)?;
            if m.rows() != n || m.cols() != n {
                return Err(CliError::Validation(format!(
                    "algebra.inner_product must be {n}x{n}, found {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            m
        }
        None => {
            let probe = LieAlgebra::new(&e.name, n, c.clone(), Matrix::identity(n)).map_err(invalid)?;
            let neg = probe.killing_matrix().scale(&-GaussianRational::one());
            if first_nonpositive_pivot(&neg).is_some() {
                return Err(CliError::Validation(
                    "no inner_product given and the negative Killing form is not positive definite".into(),
                ));
            }
            neg
        }
    };
    LieAlgebra::validated(&e.name, n, c, ip).map_err(invalid)
}

pub fn build_algebra(input: &AlgebraInput) -> Result<LieAlgebra, CliError> {
    match input {
        AlgebraInput::Catalog(s) => build(s).map_err(invalid),
        AlgebraInput::Explicit(e) => build_explicit(e),
    }
}

pub fn check_j_shape(field: &str, j: &Matrix, dim: usize, what: &str) -> Result<(), CliError> {
    if j.rows() != dim || j.cols() != dim {
        return Err(CliError::Validation(format!(
            "{field}: expected {dim}x{dim} matrix on {what}, found {}x{}",
            j.rows(),
            j.cols()
        )));
    }
    Ok(())
}

/// Builds the algebra and subalgebra and checks `j` against `dim g/h`.
pub fn resolve(spec: &ProblemSpec) -> Result<Problem, CliError> {
    let algebra = build_algebra(&spec.algebra)?;
    let subalgebra = spec
        .subalgebra
        .as_ref()
        .map(|s| build_subalgebra(&algebra, s))
        .transpose()
        .map_err(invalid)?;
    if let Some(j) = &spec.j {
        let Some(h) = &subalgebra else {
            return Err(CliError::Validation("j requires a subalgebra".into()));
        };
        check_j_shape("j", j, algebra.dim() - h.dim(), "the quotient g/h")?;
    }
    Ok(Problem {
        algebra,
        subalgebra,
        j: spec.j.clone(),
        parabolic_index: spec.parabolic_index,
        j1: spec.j1.clone(),
    })
}
