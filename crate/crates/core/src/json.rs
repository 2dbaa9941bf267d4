//! JSON schemas for fields, scalars, algebras, elements, subspaces, and
//! reports. Parsing and emission round-trip exactly; all maps are emitted
//! with sorted keys so output files are byte-stable.
//!
//! Scalars serialize by field kind: prime residues as integers, rationals as
//! decimal strings (`"3/2"`), cyclotomic elements as arrays of rational
//! strings of length `phi(n)`.

use std::str::FromStr;

use num::rational::BigRational;
use serde_json::{json, Map, Value};

use crate::builders::GroupPresentation;
use crate::error::{Error, Result};
use crate::hopf::{Coalgebra, Element, HopfAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::projections::ProjectionReport;
use crate::scalar::{Field, FieldKind, Scalar};

pub fn field_to_json(f: &Field) -> Value {
    match f.kind() {
        FieldKind::Rational => {
            if f.root_order() == 1 {
                json!({"kind": "rational"})
            } else {
                json!({"kind": "rational", "root_order": f.root_order()})
            }
        }
        FieldKind::Cyclotomic { n } => {
            if f.root_order() == *n {
                json!({"kind": "cyclotomic", "n": n})
            } else {
                json!({"kind": "cyclotomic", "n": n, "root_order": f.root_order()})
            }
        }
        FieldKind::Prime { p } => {
            let omega = f.to_residue(&f.omega()).expect("prime omega");
            json!({"kind": "prime", "p": p, "omega": omega})
        }
    }
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Invalid("field must be an object".into()))?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Invalid("field needs a string 'kind'".into()))?;
    let get_u64 = |key: &str| -> Result<u64> {
        obj.get(key)
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Invalid(format!("field needs integer '{key}'")))
    };
    match kind {
        "rational" => {
            let order = obj.get("root_order").and_then(Value::as_u64).unwrap_or(1);
            Field::rational_with_root(order)
        }
        "cyclotomic" => {
            let n = get_u64("n")?;
            let order = obj.get("root_order").and_then(Value::as_u64).unwrap_or(n);
            Field::cyclotomic_with_root(n, order)
        }
        "prime" => Field::prime_with_omega(get_u64("p")?, get_u64("omega")?),
        other => Err(Error::Invalid(format!("unknown field kind '{other}'"))),
    }
}

pub fn scalar_to_json(f: &Field, s: &Scalar) -> Value {
    match s {
        Scalar::Prime(r) => json!(r),
        Scalar::Rational(x) => json!(x.to_string()),
        Scalar::Cyclotomic(coeffs) => {
            Value::Array(coeffs.iter().map(|c| json!(c.to_string())).collect())
        }
    }
    .clone_with_field(f)
}

// Small helper trait so emission stays uniform if representations change.
trait CloneWithField {
    fn clone_with_field(self, f: &Field) -> Value;
}
impl CloneWithField for Value {
    fn clone_with_field(self, _f: &Field) -> Value {
        self
    }
}

fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => {
            BigRational::from_str(s).map_err(|e| Error::Invalid(format!("bad rational '{s}': {e}")))
        }
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Invalid(format!("non-integer number {n}")))?;
            Ok(BigRational::from_integer(i.into()))
        }
        _ => Err(Error::Invalid("rational must be a string or integer".into())),
    }
}

pub fn scalar_from_json(f: &Field, v: &Value) -> Result<Scalar> {
    match f.kind() {
        FieldKind::Prime { p } => {
            let r = v
                .as_u64()
                .or_else(|| v.as_str().and_then(|s| s.parse().ok()))
                .ok_or_else(|| Error::Invalid("prime scalar must be an integer".into()))?;
            if r >= *p {
                return Err(Error::Invalid(format!("residue {r} out of range for p={p}")));
            }
            Ok(f.from_residue(r))
        }
        FieldKind::Rational => Ok(Scalar::Rational(rational_from_json(v)?)),
        FieldKind::Cyclotomic { .. } => {
            let arr = v
                .as_array()
                .ok_or_else(|| Error::Invalid("cyclotomic scalar must be an array".into()))?;
            let zero = f.zero();
            let Scalar::Cyclotomic(z) = &zero else {
                unreachable!()
            };
            if arr.len() != z.len() {
                return Err(Error::Invalid(format!(
                    "cyclotomic scalar needs {} coefficients, got {}",
                    z.len(),
                    arr.len()
                )));
            }
            let coeffs = arr
                .iter()
                .map(rational_from_json)
                .collect::<Result<Vec<_>>>()?;
            Ok(Scalar::Cyclotomic(coeffs))
        }
    }
}

fn scalar_vec_to_json(f: &Field, v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| scalar_to_json(f, s)).collect())
}

fn scalar_vec_from_json(f: &Field, v: &Value, len: usize) -> Result<Vec<Scalar>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Invalid("expected an array of scalars".into()))?;
    if arr.len() != len {
        return Err(Error::Invalid(format!(
            "expected {len} scalars, got {}",
            arr.len()
        )));
    }
    arr.iter().map(|x| scalar_from_json(f, x)).collect()
}

pub fn element_to_json(a: &HopfAlgebra, e: &Element) -> Value {
    scalar_vec_to_json(a.field(), &e.0)
}

pub fn element_from_json(a: &HopfAlgebra, v: &Value) -> Result<Element> {
    Ok(Element(scalar_vec_from_json(a.field(), v, a.dim())?))
}

fn matrix_to_json(f: &Field, m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| scalar_vec_to_json(f, m.row(r)))
            .collect(),
    )
}

fn matrix_from_json(f: &Field, v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Invalid("expected a matrix (array of rows)".into()))?;
    if arr.len() != rows {
        return Err(Error::Invalid(format!(
            "expected {rows} rows, got {}",
            arr.len()
        )));
    }
    let mut data = Vec::with_capacity(rows);
    for row in arr {
        data.push(scalar_vec_from_json(f, row, cols)?);
    }
    Ok(Matrix::from_rows(f, &data))
}

pub fn subspace_to_json(f: &Field, s: &Subspace) -> Value {
    matrix_to_json(f, s.basis())
}

pub fn subspace_from_json(f: &Field, v: &Value, ambient: usize) -> Result<Subspace> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Invalid("expected a subspace (array of basis rows)".into()))?;
    let rows = arr
        .iter()
        .map(|row| scalar_vec_from_json(f, row, ambient))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span_vectors(f, &rows, ambient))
}

/// Serializes an algebra (and an optional distinguished subspace, used by
/// the idempotent-ideal example) in the structure-constant schema.
pub fn algebra_to_json(a: &HopfAlgebra, ideal: Option<&Subspace>) -> Value {
    let f = a.field();
    let d = a.dim();
    let mut obj = Map::new();
    obj.insert("dim".into(), json!(d));
    obj.insert("labels".into(), json!(a.labels()));
    obj.insert("field".into(), field_to_json(f));
    let mult: Vec<Value> = (0..d)
        .map(|i| {
            Value::Array(
                (0..d)
                    .map(|j| scalar_vec_to_json(f, a.structure_constant(i, j)))
                    .collect(),
            )
        })
        .collect();
    obj.insert("mult".into(), Value::Array(mult));
    obj.insert("unit".into(), scalar_vec_to_json(f, &a.unit().0));
    if let Ok(c) = a.coalgebra() {
        // Δ stored per basis element: row k lists the dim^2 coefficients of
        // Δ(e_k) in the (i, j) ↦ i*dim + j flattening.
        let delta: Vec<Value> = (0..d)
            .map(|k| {
                let col: Vec<Scalar> = (0..d * d).map(|r| c.delta.at(r, k).clone()).collect();
                scalar_vec_to_json(f, &col)
            })
            .collect();
        obj.insert("delta".into(), Value::Array(delta));
        obj.insert("counit".into(), scalar_vec_to_json(f, &c.counit));
        obj.insert("antipode".into(), matrix_to_json(f, &c.antipode));
        obj.insert("antipode_inv".into(), matrix_to_json(f, &c.antipode_inv));
    }
    if let Some(s) = ideal {
        obj.insert("ideal".into(), subspace_to_json(f, s));
    }
    Value::Object(obj)
}

pub fn algebra_from_json(v: &Value) -> Result<(HopfAlgebra, Option<Subspace>)> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Invalid("algebra must be an object".into()))?;
    let d = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Invalid("algebra needs integer 'dim'".into()))? as usize;
    let labels: Vec<String> = obj
        .get("labels")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Invalid("algebra needs 'labels'".into()))?
        .iter()
        .map(|l| {
            l.as_str()
                .map(String::from)
                .ok_or_else(|| Error::Invalid("labels must be strings".into()))
        })
        .collect::<Result<_>>()?;
    if labels.len() != d {
        return Err(Error::Invalid("labels length must equal dim".into()));
    }
    let field = field_from_json(
        obj.get("field")
            .ok_or_else(|| Error::Invalid("algebra needs 'field'".into()))?,
    )?;
    let mult_rows = obj
        .get("mult")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Invalid("algebra needs 'mult'".into()))?;
    if mult_rows.len() != d {
        return Err(Error::Invalid("mult must have dim rows".into()));
    }
    let mut mult = Vec::with_capacity(d * d);
    for row in mult_rows {
        let cols = row
            .as_array()
            .ok_or_else(|| Error::Invalid("mult rows must be arrays".into()))?;
        if cols.len() != d {
            return Err(Error::Invalid("mult must be dim x dim".into()));
        }
        for cell in cols {
            mult.push(scalar_vec_from_json(&field, cell, d)?);
        }
    }
    let unit = scalar_vec_from_json(
        &field,
        obj.get("unit")
            .ok_or_else(|| Error::Invalid("algebra needs 'unit'".into()))?,
        d,
    )?;

    let coalgebra = if let Some(delta_v) = obj.get("delta") {
        let delta_rows = delta_v
            .as_array()
            .ok_or_else(|| Error::Invalid("delta must be an array".into()))?;
        if delta_rows.len() != d {
            return Err(Error::Invalid("delta must have dim entries".into()));
        }
        let mut delta = Matrix::zeros(&field, d * d, d);
        for (k, row) in delta_rows.iter().enumerate() {
            let col = scalar_vec_from_json(&field, row, d * d)?;
            for (r, s) in col.into_iter().enumerate() {
                *delta.at_mut(r, k) = s;
            }
        }
        let counit = scalar_vec_from_json(
            &field,
            obj.get("counit")
                .ok_or_else(|| Error::Invalid("coalgebra needs 'counit'".into()))?,
            d,
        )?;
        let antipode = matrix_from_json(
            &field,
            obj.get("antipode")
                .ok_or_else(|| Error::Invalid("coalgebra needs 'antipode'".into()))?,
            d,
            d,
        )?;
        let antipode_inv = match obj.get("antipode_inv") {
            Some(v) => matrix_from_json(&field, v, d, d)?,
            None => antipode
                .inverse(&field)
                .ok_or_else(|| Error::Invalid("antipode is singular".into()))?,
        };
        Some(Coalgebra {
            delta,
            counit,
            antipode,
            antipode_inv,
        })
    } else {
        None
    };

    let algebra = HopfAlgebra::new(labels, field, mult, unit, coalgebra)?;
    let ideal = match obj.get("ideal") {
        Some(v) => Some(subspace_from_json(algebra.field(), v, d)?),
        None => None,
    };
    Ok((algebra, ideal))
}

pub fn projection_report_to_json(f: &Field, r: &ProjectionReport) -> Value {
    json!({
        "idempotent": r.idempotent,
        "right": r.right_gl,
        "left": r.left_gl,
        "two_sided": r.two_sided,
        "s_fixed": r.s_fixed,
        "s2_fixed": r.s2_fixed,
        "psp_commute": r.psp_commute,
        "delta_swap": r.delta_swap,
        "weak_right": r.weak_right,
        "weak_left": r.weak_left,
        "weak": r.weak,
        "eps": scalar_to_json(f, &r.eps_value),
    })
}

/// Parses a group presentation: either `{"cyclic": [n1, n2, ...]}` or
/// `{"table": [[...], ...]}`.
pub fn group_from_json(v: &Value) -> Result<GroupPresentation> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Invalid("group must be an object".into()))?;
    if let Some(c) = obj.get("cyclic") {
        let factors = c
            .as_array()
            .ok_or_else(|| Error::Invalid("'cyclic' must be an array".into()))?
            .iter()
            .map(|x| {
                x.as_u64()
                    .map(|v| v as usize)
                    .ok_or_else(|| Error::Invalid("cyclic factors must be integers".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(GroupPresentation::Cyclic(factors));
    }
    if let Some(t) = obj.get("table") {
        let rows = t
            .as_array()
            .ok_or_else(|| Error::Invalid("'table' must be an array".into()))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Invalid("table rows must be arrays".into()))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|v| v as usize)
                            .ok_or_else(|| Error::Invalid("table entries must be integers".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(GroupPresentation::Table(rows));
    }
    Err(Error::Invalid("group needs 'cyclic' or 'table'".into()))
}
