//! JSON wire formats. Scalars travel as strings, indices are 1-based.
//!
//! ```text
//! BilinearForm    {"dim": 2, "field": "Q", "entries": [["1", "0"], ["2", "1/2"]]}
//! QuadraticForm   {"diag": ["1", "1"], "polar_upper": [["0", "3"], ["0", "0"]]}
//! TensorElt       {"terms": [{"word": [1, 2, 1], "coeff": "3/2"}]}
//! CliffElt        {"terms": [{"blade": [1, 2], "coeff": "-1"}]}
//! CliffordContext {"dim": 2, "field": "Q", "quadratic": {...}}
//! ```
//!
//! A quadratic form may also carry optional "dim" and "field" keys; without
//! them the dimension is the length of "diag" and the field comes from the
//! caller.

use serde::{Deserialize, Serialize};

use crate::clifford::{blade_indices, CliffElt, CliffordContext, DualElt};
use crate::error::{Error, Result};
use crate::forms::{AlgebraContext, BilinearForm, DualTwoForm, QuadraticForm};
use crate::linalg::Matrix;
use crate::scalar::{FieldSpec, Scalar};
use crate::tensor::TensorElt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BilinearFormJson {
    pub dim: usize,
    pub field: FieldSpec,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadraticFormJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub diag: Vec<String>,
    pub polar_upper: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordTerm {
    pub word: Vec<usize>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorJson {
    pub terms: Vec<WordTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BladeTerm {
    pub blade: Vec<usize>,
    pub coeff: String,
}

/// Used for Clifford elements, elements of Λ(V*), and two-forms in Λ²(V*).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BladeTermsJson {
    pub terms: Vec<BladeTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliffordContextJson {
    pub dim: usize,
    pub field: FieldSpec,
    pub quadratic: QuadraticFormJson,
}

fn parse_all(field: FieldSpec, row: &[String]) -> Result<Vec<Scalar>> {
    row.iter().map(|s| Scalar::parse(s, field)).collect()
}

fn zero_based(indices: &[usize], dim: usize) -> Result<Vec<usize>> {
    indices
        .iter()
        .map(|&i| {
            if i == 0 || i > dim {
                Err(Error::IndexOutOfRange { index: i, dim })
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

fn one_based(indices: impl Iterator<Item = usize>) -> Vec<usize> {
    indices.map(|i| i + 1).collect()
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(Scalar::to_string).collect())
        .collect()
}

fn square_matrix(field: FieldSpec, n: usize, rows: &[Vec<String>]) -> Result<Matrix> {
    if rows.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: rows.len(),
        });
    }
    let parsed = rows
        .iter()
        .map(|r| {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            parse_all(field, r)
        })
        .collect::<Result<Vec<_>>>()?;
    if n == 0 {
        return Ok(Matrix::zeros(field, 0, 0));
    }
    Matrix::from_rows(field, parsed)
}

pub fn bilinear_to_json(f: &BilinearForm) -> BilinearFormJson {
    BilinearFormJson {
        dim: f.ctx().dim(),
        field: f.ctx().field(),
        entries: matrix_strings(f.matrix()),
    }
}

pub fn bilinear_from_json(j: &BilinearFormJson) -> Result<BilinearForm> {
    let ctx = AlgebraContext::new(j.dim, j.field)?;
    let m = square_matrix(j.field, j.dim, &j.entries)?;
    BilinearForm::new(ctx, m)
}

pub fn quadratic_to_json(q: &QuadraticForm) -> QuadraticFormJson {
    QuadraticFormJson {
        dim: Some(q.ctx().dim()),
        field: Some(q.ctx().field()),
        diag: q.diag_values().iter().map(Scalar::to_string).collect(),
        polar_upper: matrix_strings(q.polar_upper()),
    }
}

/// `default_field` applies when the JSON has no "field" key.
pub fn quadratic_from_json(j: &QuadraticFormJson, default_field: FieldSpec) -> Result<QuadraticForm> {
    let field = j.field.unwrap_or(default_field);
    let n = j.diag.len();
    if let Some(d) = j.dim {
        if d != n {
            return Err(Error::DimensionMismatch { expected: d, got: n });
        }
    }
    let ctx = AlgebraContext::new(n, field)?;
    let diag = parse_all(field, &j.diag)?;
    let polar = square_matrix(field, n, &j.polar_upper)?;
    QuadraticForm::new(ctx, diag, polar)
}

pub fn context_to_json(c: &CliffordContext) -> CliffordContextJson {
    CliffordContextJson {
        dim: c.dim(),
        field: c.base().field(),
        quadratic: quadratic_to_json(c.quadratic()),
    }
}

pub fn context_from_json(j: &CliffordContextJson) -> Result<CliffordContext> {
    if let Some(f) = j.quadratic.field {
        if f != j.field {
            return Err(Error::Invalid(format!(
                "context field {} disagrees with quadratic form field {f}",
                j.field
            )));
        }
    }
    let q = quadratic_from_json(&j.quadratic, j.field)?;
    if q.ctx().dim() != j.dim {
        return Err(Error::DimensionMismatch {
            expected: j.dim,
            got: q.ctx().dim(),
        });
    }
    Ok(CliffordContext::new(q))
}

pub fn tensor_to_json(t: &TensorElt) -> TensorJson {
    TensorJson {
        terms: t
            .terms()
            .iter()
            .map(|(w, c)| WordTerm {
                word: one_based(w.iter().map(|&i| i as usize)),
                coeff: c.to_string(),
            })
            .collect(),
    }
}

pub fn tensor_from_json(j: &TensorJson, ctx: AlgebraContext) -> Result<TensorElt> {
    let terms = j
        .terms
        .iter()
        .map(|t| Ok((zero_based(&t.word, ctx.dim())?, Scalar::parse(&t.coeff, ctx.field())?)))
        .collect::<Result<Vec<_>>>()?;
    TensorElt::from_terms(ctx, terms)
}

fn blade_terms<'a>(terms: impl Iterator<Item = (&'a u64, &'a Scalar)>) -> BladeTermsJson {
    BladeTermsJson {
        terms: terms
            .map(|(&b, c)| BladeTerm {
                blade: one_based(blade_indices(b)),
                coeff: c.to_string(),
            })
            .collect(),
    }
}

fn parse_blade_terms(j: &BladeTermsJson, ctx: &AlgebraContext) -> Result<Vec<(Vec<usize>, Scalar)>> {
    j.terms
        .iter()
        .map(|t| Ok((zero_based(&t.blade, ctx.dim())?, Scalar::parse(&t.coeff, ctx.field())?)))
        .collect()
}

pub fn cliff_to_json(e: &CliffElt) -> BladeTermsJson {
    blade_terms(e.terms().iter())
}

pub fn cliff_from_json(j: &BladeTermsJson, cctx: &CliffordContext) -> Result<CliffElt> {
    CliffElt::from_terms(cctx, parse_blade_terms(j, cctx.base())?)
}

pub fn dual_to_json(d: &DualElt) -> BladeTermsJson {
    blade_terms(d.terms().iter())
}

pub fn dual_from_json(j: &BladeTermsJson, ctx: AlgebraContext) -> Result<DualElt> {
    DualElt::from_terms(ctx, parse_blade_terms(j, &ctx)?)
}

pub fn two_form_to_json(a: &DualTwoForm) -> BladeTermsJson {
    dual_to_json(&DualElt::from_two_form(a))
}

/// A two-form given as terms over 2-element blades: c_ij for e_i* ∧ e_j*.
pub fn two_form_from_json(j: &BladeTermsJson, ctx: AlgebraContext) -> Result<DualTwoForm> {
    let n = ctx.dim();
    let mut m = Matrix::zeros(ctx.field(), n, n);
    for (idx, c) in parse_blade_terms(j, &ctx)? {
        if idx.len() != 2 || idx[0] >= idx[1] {
            return Err(Error::Invalid(
                "two-form terms need blades [i, j] with i < j".into(),
            ));
        }
        let v = m.get(idx[0], idx[1]) + &c;
        m.set(idx[0], idx[1], v);
    }
    DualTwoForm::new(ctx, m)
}
