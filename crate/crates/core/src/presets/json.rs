//! The JSON file format for algebras and tensors.
//!
//! A scalar is an array of `φ(m)` rational strings (`"p"` or `"p/q"`): its
//! power-basis coordinates in Q(ζ_m), where `m` is the conductor declared
//! by the enclosing algebra.

use num_traits::Zero;
use serde_json::{json, Map, Value};

use super::groups::normalize;
use crate::error::{Error, Result};
use crate::exactfield::{euler_phi, Cyclotomic, Rational};
use crate::hopf::{HopfAlgebra, HopfData, Tensor};
use crate::linalg::Matrix;
use crate::Hopf;

const HOPF_FIELDS: &[&str] = &[
    "name",
    "dim",
    "conductor",
    "basis_labels",
    "unit",
    "counit",
    "mult",
    "comult",
    "antipode",
    "grouplikes",
    "grading",
    "r_matrix",
];

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

pub fn scalar_to_json(c: &Cyclotomic, conductor: u32) -> Value {
    let lifted = c.lift(conductor).expect("scalar conductor divides the algebra conductor");
    Value::Array(lifted.coeffs().iter().map(|r| Value::String(r.to_string())).collect())
}

pub fn scalar_from_json(v: &Value, conductor: u32, path: &str) -> Result<Cyclotomic> {
    let arr = v
        .as_array()
        .ok_or_else(|| schema(path, "scalar must be an array of rational strings"))?;
    let phi = euler_phi(conductor);
    if arr.len() != phi {
        return Err(schema(
            path,
            format!("conductor {conductor} needs {phi} coordinates, got {}", arr.len()),
        ));
    }
    let coeffs = arr
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let s = x
                .as_str()
                .ok_or_else(|| schema(&format!("{path}[{i}]"), "coordinate must be a string"))?;
            s.parse::<Rational>()
                .map_err(|e| schema(&format!("{path}[{i}]"), e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(normalize(Cyclotomic::from_coeffs(conductor, coeffs)?))
}

fn vec_to_json(v: &[Cyclotomic], m: u32) -> Value {
    Value::Array(v.iter().map(|c| scalar_to_json(c, m)).collect())
}

fn vec_from_json(v: &Value, n: usize, m: u32, path: &str) -> Result<Vec<Cyclotomic>> {
    let arr = v
        .as_array()
        .ok_or_else(|| schema(path, "expected an array of scalars"))?;
    if arr.len() != n {
        return Err(schema(path, format!("expected {n} entries, got {}", arr.len())));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| scalar_from_json(x, m, &format!("{path}[{i}]")))
        .collect()
}

fn matrix_to_json(a: &Matrix<Cyclotomic>, m: u32) -> Value {
    Value::Array((0..a.rows()).map(|r| vec_to_json(a.row(r), m)).collect())
}

fn matrix_from_json(v: &Value, n: usize, m: u32, path: &str) -> Result<Matrix<Cyclotomic>> {
    let arr = v
        .as_array()
        .ok_or_else(|| schema(path, "expected a matrix (array of rows)"))?;
    if arr.len() != n {
        return Err(schema(path, format!("expected {n} rows, got {}", arr.len())));
    }
    let rows = arr
        .iter()
        .enumerate()
        .map(|(i, r)| vec_from_json(r, n, m, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

/// Dense `n × n` coefficient matrix of an order-2 tensor.
pub fn tensor_to_json(t: &Tensor<Cyclotomic>, n: usize, conductor: u32) -> Value {
    matrix_to_json(&t.to_matrix(n, n), conductor)
}

pub fn tensor_from_json(v: &Value, n: usize, conductor: u32, path: &str) -> Result<Tensor<Cyclotomic>> {
    Ok(Tensor::from_matrix(&matrix_from_json(v, n, conductor, path)?))
}

pub fn hopf_to_json(h: &Hopf) -> Value {
    let n = h.dim();
    let m = h.conductor();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let sparse = h.mul_basis(i, j);
            if sparse.is_empty() {
                continue;
            }
            let mut dense = vec![Cyclotomic::zero(); n];
            for (k, c) in sparse {
                dense[*k] = c.clone();
            }
            mult.push(json!([i, j, vec_to_json(&dense, m)]));
        }
    }
    let mut comult = Vec::new();
    for k in 0..n {
        for (i, j, c) in h.comult_entries(k) {
            comult.push(json!([k, i, j, scalar_to_json(c, m)]));
        }
    }
    let mut obj = Map::new();
    obj.insert("name".into(), json!(h.name()));
    obj.insert("dim".into(), json!(n));
    obj.insert("conductor".into(), json!(m));
    obj.insert("basis_labels".into(), json!(h.basis_labels()));
    obj.insert("unit".into(), vec_to_json(&h.one(), m));
    obj.insert("counit".into(), vec_to_json(h.counit_coeffs(), m));
    obj.insert("mult".into(), Value::Array(mult));
    obj.insert("comult".into(), Value::Array(comult));
    obj.insert("antipode".into(), matrix_to_json(h.antipode_matrix(), m));
    if !h.declared_grouplikes().is_empty() {
        obj.insert(
            "grouplikes".into(),
            Value::Array(h.declared_grouplikes().iter().map(|g| vec_to_json(g, m)).collect()),
        );
    }
    if let Some(deg) = h.grading() {
        obj.insert("grading".into(), json!(deg));
    }
    Value::Object(obj)
}

/// Pretty-printed, newline-terminated.
pub fn hopf_to_json_string(h: &Hopf) -> String {
    let mut s = serde_json::to_string_pretty(&hopf_to_json(h)).expect("serializable");
    s.push('\n');
    s
}

fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        schema(
            &format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

fn get_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn index(v: &Value, n: usize, path: &str) -> Result<usize> {
    let i = get_usize(v, path)?;
    if i >= n {
        return Err(schema(path, format!("index {i} out of range for dimension {n}")));
    }
    Ok(i)
}

/// Parse an algebra document, checking only its shape. Accepts a string or
/// an already parsed value.
pub fn hopf_from_json_unchecked(v: &Value) -> Result<Hopf> {
    let obj = v
        .as_object()
        .ok_or_else(|| schema("$", "algebra must be a JSON object"))?;
    if let Some(k) = obj.keys().find(|k| !HOPF_FIELDS.contains(&k.as_str())) {
        return Err(schema(k, "unknown field"));
    }
    let field = |k: &str| obj.get(k).ok_or_else(|| schema(k, "missing field"));
    let name = field("name")?
        .as_str()
        .ok_or_else(|| schema("name", "expected a string"))?
        .to_string();
    let n = get_usize(field("dim")?, "dim")?;
    if n == 0 {
        return Err(schema("dim", "dimension must be positive"));
    }
    let m = get_usize(field("conductor")?, "conductor")?;
    if m == 0 || m > 10_000 {
        return Err(schema("conductor", "conductor must be in 1..=10000"));
    }
    let m = m as u32;
    let labels: Vec<String> = field("basis_labels")?
        .as_array()
        .and_then(|a| a.iter().map(|x| x.as_str().map(String::from)).collect())
        .ok_or_else(|| schema("basis_labels", "expected an array of strings"))?;
    if labels.len() != n {
        return Err(schema("basis_labels", format!("expected {n} labels, got {}", labels.len())));
    }
    let unit = vec_from_json(field("unit")?, n, m, "unit")?;
    let counit = vec_from_json(field("counit")?, n, m, "counit")?;

    let mut mult = vec![vec![vec![Cyclotomic::zero(); n]; n]; n];
    let mut seen = vec![vec![false; n]; n];
    let entries = field("mult")?
        .as_array()
        .ok_or_else(|| schema("mult", "expected an array of [i, j, coeffs] entries"))?;
    for (e, entry) in entries.iter().enumerate() {
        let path = format!("mult[{e}]");
        let t = entry
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| schema(&path, "expected [i, j, coeffs]"))?;
        let i = index(&t[0], n, &format!("{path}[0]"))?;
        let j = index(&t[1], n, &format!("{path}[1]"))?;
        if std::mem::replace(&mut seen[i][j], true) {
            return Err(schema(&path, format!("duplicate product entry ({i}, {j})")));
        }
        mult[i][j] = vec_from_json(&t[2], n, m, &format!("{path}[2]"))?;
    }

    let mut comult: Vec<Matrix<Cyclotomic>> = vec![Matrix::zeros(n, n); n];
    let entries = field("comult")?
        .as_array()
        .ok_or_else(|| schema("comult", "expected an array of [k, i, j, coeff] entries"))?;
    for (e, entry) in entries.iter().enumerate() {
        let path = format!("comult[{e}]");
        let t = entry
            .as_array()
            .filter(|t| t.len() == 4)
            .ok_or_else(|| schema(&path, "expected [k, i, j, coeff]"))?;
        let k = index(&t[0], n, &format!("{path}[0]"))?;
        let i = index(&t[1], n, &format!("{path}[1]"))?;
        let j = index(&t[2], n, &format!("{path}[2]"))?;
        if !comult[k].get(i, j).is_zero() {
            return Err(schema(&path, format!("duplicate coproduct entry ({k}, {i}, {j})")));
        }
        comult[k].set(i, j, scalar_from_json(&t[3], m, &format!("{path}[3]"))?);
    }
    let antipode = matrix_from_json(field("antipode")?, n, m, "antipode")?;
    let grouplikes = match obj.get("grouplikes") {
        None => Vec::new(),
        Some(v) => v
            .as_array()
            .ok_or_else(|| schema("grouplikes", "expected an array of elements"))?
            .iter()
            .enumerate()
            .map(|(i, g)| vec_from_json(g, n, m, &format!("grouplikes[{i}]")))
            .collect::<Result<_>>()?,
    };
    let grading = match obj.get("grading") {
        None => None,
        Some(v) => {
            let deg: Vec<u32> = v
                .as_array()
                .and_then(|a| a.iter().map(|x| x.as_u64().and_then(|d| u32::try_from(d).ok())).collect())
                .ok_or_else(|| schema("grading", "expected an array of non-negative degrees"))?;
            if deg.len() != n {
                return Err(schema("grading", format!("expected {n} degrees, got {}", deg.len())));
            }
            Some(deg)
        }
    };
    HopfAlgebra::new(HopfData {
        name,
        conductor: m,
        basis_labels: labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
        grouplikes,
        grading,
    })
}

/// Parse and validate: every axiom, the declared grouplikes as a group, and
/// the declared grading.
pub fn hopf_from_json(text: &str) -> Result<Hopf> {
    let h = hopf_from_json_unchecked(&parse_text(text)?)?;
    let violations = h.validate();
    if !violations.is_empty() {
        return Err(Error::AxiomViolations {
            algebra: h.name().to_string(),
            violations: violations.iter().map(ToString::to_string).collect(),
        });
    }
    if !h.declared_grouplikes().is_empty() {
        h.grouplike_group()?;
    }
    Ok(h)
}

/// Parse JSON text into a value with line/column diagnostics.
pub(crate) fn parse_json(text: &str) -> Result<Value> {
    parse_text(text)
}
