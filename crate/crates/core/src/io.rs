//! JSON model files.
//!
//! Group files: `{ "conductor": N, "dimension": n, "generators": [matrix] }`
//! where a matrix is an n×n array of entries and each entry is either a
//! rational string `"p/q"` or an array of rational strings giving the
//! coordinates in the basis 1, ζ, ζ², …  Torus files:
//! `{ "dimension": 2n, "generators": [integer matrix] }`.

use std::collections::BTreeMap;

use num::BigRational;
use serde_json::Value;

use crate::cyclo::{format_rational, parse_rational, CycField, CycMatrix, CycNum};
use crate::error::{Error, Result};
use crate::group::FiniteMatrixGroup;
use crate::models::torus::TorusModel;
use crate::models::{CohomologyTable, Degree};
use crate::sectors::SectorTable;

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| Error::Parse(format!("missing field \"{key}\"")))
}

fn positive(v: &Value, path: &str) -> Result<u64> {
    match v.as_u64() {
        Some(n) if n >= 1 => Ok(n),
        _ => Err(Error::Parse(format!("{path}: expected a positive integer, found {v}"))),
    }
}

fn rational_at(v: &Value, path: &str) -> Result<BigRational> {
    match v {
        Value::String(s) => {
            parse_rational(s).ok_or_else(|| Error::Parse(format!("{path}: invalid rational \"{s}\"")))
        }
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| Error::Parse(format!("{path}: expected an integer or rational string, found {n}"))),
        other => Err(Error::Parse(format!("{path}: expected a rational, found {other}"))),
    }
}

fn cyc_entry(v: &Value, f: &std::sync::Arc<CycField>, path: &str) -> Result<CycNum> {
    match v {
        Value::Array(items) => {
            if items.is_empty() || items.len() as u64 > f.conductor().max(f.degree() as u64) {
                return Err(Error::Parse(format!(
                    "{path}: expected between 1 and {} coordinates, found {}",
                    f.degree(),
                    items.len()
                )));
            }
            let coeffs = items
                .iter()
                .enumerate()
                .map(|(i, x)| rational_at(x, &format!("{path}[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(CycNum::from_coeffs(f, coeffs))
        }
        other => Ok(CycNum::from_rational(f, rational_at(other, path)?)),
    }
}

fn square_rows<'a>(v: &'a Value, n: usize, path: &str) -> Result<Vec<&'a Vec<Value>>> {
    let rows = v.as_array().ok_or_else(|| Error::Parse(format!("{path}: expected an array of rows")))?;
    if rows.len() != n {
        return Err(Error::Validation(format!("{path}: expected {n} rows, found {}", rows.len())));
    }
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            let r = r.as_array().ok_or_else(|| Error::Parse(format!("{path}[{i}]: expected an array")))?;
            if r.len() != n {
                return Err(Error::Validation(format!("{path}[{i}]: expected {n} entries, found {}", r.len())));
            }
            Ok(r)
        })
        .collect()
}

/// Parsed but not yet closed group description.
#[derive(Clone, Debug)]
pub struct GroupSpec {
    pub field: std::sync::Arc<CycField>,
    pub dim: usize,
    pub generators: Vec<CycMatrix>,
}

impl GroupSpec {
    pub fn generate(&self, cap: usize) -> Result<FiniteMatrixGroup> {
        FiniteMatrixGroup::generate(&self.field, self.dim, &self.generators, cap)
    }
}

pub fn parse_group_json(text: &str) -> Result<GroupSpec> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))?;
    let conductor = positive(field(&root, "conductor")?, "conductor")?;
    let dim = positive(field(&root, "dimension")?, "dimension")? as usize;
    let f = CycField::new(conductor);
    let gens = field(&root, "generators")?
        .as_array()
        .ok_or_else(|| Error::Parse("generators: expected an array".into()))?;
    let generators = gens
        .iter()
        .enumerate()
        .map(|(gi, m)| {
            let path = format!("generators[{gi}]");
            let rows = square_rows(m, dim, &path)?;
            let mut entries = Vec::with_capacity(dim * dim);
            for (i, row) in rows.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    entries.push(cyc_entry(e, &f, &format!("{path}[{i}][{j}]"))?);
                }
            }
            Ok(CycMatrix::from_entries(&f, dim, dim, entries))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupSpec { field: f, dim, generators })
}

pub fn parse_torus_json(text: &str) -> Result<TorusModel> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))?;
    let dim = positive(field(&root, "dimension")?, "dimension")? as usize;
    let gens = field(&root, "generators")?
        .as_array()
        .ok_or_else(|| Error::Parse("generators: expected an array".into()))?;
    let generators = gens
        .iter()
        .enumerate()
        .map(|(gi, m)| {
            let path = format!("generators[{gi}]");
            let rows = square_rows(m, dim, &path)?;
            rows.iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, e)| {
                            e.as_i64().ok_or_else(|| {
                                Error::Parse(format!("{path}[{i}][{j}]: expected an integer, found {e}"))
                            })
                        })
                        .collect::<Result<Vec<i64>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    TorusModel::new(dim, generators)
}

/// Cyclotomic number as an array of rational strings.
pub fn cyc_to_json(x: &CycNum) -> Value {
    Value::Array(x.coeffs().iter().map(|c| Value::String(format_rational(c))).collect())
}

/// Matrix dump; rational entries are written as bare strings.
pub fn matrix_to_json(m: &CycMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array(
                    (0..m.cols())
                        .map(|j| {
                            let e = m.get(i, j);
                            match e.as_rational() {
                                Some(r) => Value::String(format_rational(r)),
                                None => cyc_to_json(e),
                            }
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn group_to_json(g: &FiniteMatrixGroup) -> Value {
    serde_json::json!({
        "conductor": g.field().conductor(),
        "dimension": g.dim(),
        "generators": g.generators().iter().map(|&i| matrix_to_json(g.element(i))).collect::<Vec<_>>(),
    })
}

/// Sector table with degree shifts as rational strings and representative
/// matrices.
pub fn sector_table_to_json(g: &FiniteMatrixGroup, table: &SectorTable) -> Value {
    serde_json::json!({
        "order": g.order(),
        "dimension": g.dim(),
        "conductor": g.field().conductor(),
        "is_sl": g.is_sl(),
        "sectors": table.sectors().iter().map(|s| serde_json::json!({
            "label": s.label(),
            "representative": s.representative,
            "class_size": s.class_size,
            "centralizer_order": s.centralizer_order,
            "element_order": s.exponents.order,
            "iota": format_rational(&s.iota),
            "fixed_dim": s.fixed_dim,
            "exponents": s.exponents.exponents,
            "matrix": matrix_to_json(g.element(s.representative)),
        })).collect::<Vec<_>>(),
    })
}

fn entries_to_json(entries: &BTreeMap<Degree, u64>) -> Value {
    Value::Object(entries.iter().map(|(d, v)| (d.to_string(), Value::from(*v))).collect())
}

/// Degree-string → dimension map, plus the per-sector breakdown.
pub fn table_to_json(t: &CohomologyTable) -> Value {
    serde_json::json!({
        "model": t.model,
        "complex_dim": t.complex_dim,
        "total": t.total(),
        "entries": entries_to_json(&t.entries),
        "sectors": t.sectors.iter().map(|s| serde_json::json!({
            "label": s.label,
            "shift": format_rational(&s.shift),
            "entries": entries_to_json(&s.entries),
        })).collect::<Vec<_>>(),
    })
}

pub(crate) fn rational_value(r: &BigRational) -> Value {
    Value::String(format_rational(r))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q8: &str = r#"{
        "conductor": 4, "dimension": 2,
        "generators": [
            [[["0","1"], "0"], ["0", ["0","-1"]]],
            [["0","1"], ["-1","0"]]
        ]
    }"#;

    #[test]
    fn parses_quaternion_file() {
        let spec = parse_group_json(Q8).unwrap();
        assert_eq!(spec.generators.len(), 2);
        assert_eq!(spec.generate(1000).unwrap().order(), 8);
    }

    #[test]
    fn malformed_rational_names_entry() {
        let text = r#"{"conductor": 1, "dimension": 1, "generators": [[["1//2"]]]}"#;
        match parse_group_json(text) {
            Err(Error::Parse(msg)) => {
                assert!(msg.contains("generators[0][0][0]"), "{msg}");
                assert!(msg.contains("1//2"), "{msg}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn shape_errors_are_validation() {
        let text = r#"{"conductor": 1, "dimension": 2, "generators": [[["1"]]]}"#;
        assert!(matches!(parse_group_json(text), Err(Error::Validation(_))));
        assert!(matches!(parse_group_json("{"), Err(Error::Parse(_))));
        assert!(matches!(parse_group_json(r#"{"dimension": 1}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn group_json_roundtrip() {
        let g = parse_group_json(Q8).unwrap().generate(100).unwrap();
        let text = group_to_json(&g).to_string();
        let again = parse_group_json(&text).unwrap().generate(100).unwrap();
        assert_eq!(again.elements(), g.elements());
    }
}
