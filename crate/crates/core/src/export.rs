//! JSON and LaTeX encodings.
//!
//! * Rational: `"p/q"` (or `"p"` for integers).
//! * BiPoly: `[{"c": "p/q", "l": deg_lambda, "h": deg_h}, ...]`, ascending.
//! * PolyMatrix: row-major nested lists of BiPoly.
//!
//! Every top-level document carries `"schema": "jordan-rep/1"`.

use serde_json::{json, Map, Value};

use crate::exact::{format_rational, parse_rational, BiPoly, PolyMatrix, Rational};
use crate::half::HalfInt;
use crate::irrep::{Basis, Irrep, SingularVector};
use crate::verma::ElementTable;

pub const SCHEMA: &str = "jordan-rep/1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecodeError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("expected schema {SCHEMA:?}, found {0:?}")]
    Schema(String),
    #[error("field {field}: {detail}")]
    Field { field: String, detail: String },
}

fn field_err(field: &str, detail: impl Into<String>) -> DecodeError {
    DecodeError::Field {
        field: field.to_string(),
        detail: detail.into(),
    }
}

pub fn rational_to_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_json(v: &Value, field: &str) -> Result<Rational, DecodeError> {
    let s = v.as_str().ok_or_else(|| field_err(field, "expected a \"p/q\" string"))?;
    parse_rational(s).map_err(|e| field_err(field, e.to_string()))
}

pub fn bipoly_to_json(p: &BiPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|((l, h), c)| json!({"c": format_rational(c), "l": l, "h": h}))
            .collect(),
    )
}

pub fn bipoly_from_json(v: &Value, field: &str) -> Result<BiPoly, DecodeError> {
    let terms = v.as_array().ok_or_else(|| field_err(field, "expected a list of terms"))?;
    let mut out = BiPoly::zero();
    for t in terms {
        let c = rational_from_json(&t["c"], field)?;
        let deg = |key: &str| {
            t[key]
                .as_u64()
                .and_then(|d| u32::try_from(d).ok())
                .ok_or_else(|| field_err(field, format!("term degree {key:?} must be a nonnegative integer")))
        };
        out.add_term(deg("l")?, deg("h")?, c);
    }
    Ok(out)
}

pub fn matrix_to_json(m: &PolyMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| bipoly_to_json(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn matrix_from_json(v: &Value, field: &str) -> Result<PolyMatrix, DecodeError> {
    let rows = v.as_array().ok_or_else(|| field_err(field, "expected a list of rows"))?;
    let parsed = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| field_err(field, "expected a row list"))?
                .iter()
                .map(|e| bipoly_from_json(e, field))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if parsed.is_empty() {
        return Err(field_err(field, "empty matrix"));
    }
    PolyMatrix::from_rows(parsed).map_err(|e| field_err(field, e.to_string()))
}

fn document(kind: &str, body: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), SCHEMA.into());
    map.insert("kind".into(), kind.into());
    if let Value::Object(rest) = body {
        map.extend(rest);
    }
    Value::Object(map)
}

pub fn irrep_to_json(r: &Irrep) -> Value {
    document(
        "irrep",
        json!({
            "j": r.j.to_string(),
            "dim": r.dim(),
            "basis": r.basis,
            "ordering": r.basis.ordering(),
            "X": matrix_to_json(&r.x),
            "Y": matrix_to_json(&r.y),
            "H": matrix_to_json(&r.h),
        }),
    )
}

fn check_schema(v: &Value) -> Result<(), DecodeError> {
    match v.get("schema").and_then(Value::as_str) {
        Some(SCHEMA) => Ok(()),
        Some(other) => Err(DecodeError::Schema(other.to_string())),
        None => Err(DecodeError::Schema(String::new())),
    }
}

pub fn irrep_from_json(v: &Value) -> Result<Irrep, DecodeError> {
    check_schema(v)?;
    let j: HalfInt = v["j"]
        .as_str()
        .ok_or_else(|| field_err("j", "expected a string such as \"7/2\""))?
        .parse()
        .map_err(|e: crate::half::ParseHalfIntError| field_err("j", e.to_string()))?;
    let basis: Basis = serde_json::from_value(v["basis"].clone()).map_err(|e| field_err("basis", e.to_string()))?;
    let x = matrix_from_json(&v["X"], "X")?;
    let y = matrix_from_json(&v["Y"], "Y")?;
    let h = matrix_from_json(&v["H"], "H")?;
    for (name, m) in [("X", &x), ("Y", &y), ("H", &h)] {
        if m.rows() != j.dim() || m.cols() != j.dim() {
            return Err(field_err(name, format!("expected {0}x{0}, got {1}x{2}", j.dim(), m.rows(), m.cols())));
        }
    }
    Ok(Irrep { j, basis, x, y, h })
}

pub fn parse_irrep(text: &str) -> Result<Irrep, DecodeError> {
    let v: Value = serde_json::from_str(text).map_err(|e| DecodeError::Json(e.to_string()))?;
    irrep_from_json(&v)
}

pub fn singular_vector_to_json(sv: &SingularVector) -> Value {
    document(
        "singular_vector",
        json!({
            "lambda": sv.j.twice(),
            "j": sv.j.to_string(),
            "leading_level": sv.j.twice() + 1,
            "coefficients": sv.coeffs.iter().enumerate().map(|(p, c)| json!({
                "p": p + 1,
                "level": sv.j.twice() as usize + 1 - 2 * (p + 1),
                "value": bipoly_to_json(c),
            })).collect::<Vec<_>>(),
        }),
    )
}

pub fn table_to_json(t: &ElementTable, lambda: Option<&Rational>) -> Value {
    let dump = |m: &std::collections::BTreeMap<(usize, usize), BiPoly>| {
        m.iter()
            .map(|(&(n, k), v)| json!({"n": n, "m": k, "value": bipoly_to_json(v)}))
            .collect::<Vec<_>>()
    };
    document(
        "elements",
        json!({
            "max_level": t.max_level(),
            "lambda": lambda.map(format_rational),
            "H": dump(t.h_elements()),
            "X": dump(t.x_elements()),
        }),
    )
}

/// `pmatrix` body: entries separated by `&`, rows by `\\`.
pub fn emit_latex(m: &PolyMatrix) -> String {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_latex()).collect::<Vec<_>>().join(" & "))
        .collect::<Vec<_>>()
        .join(" \\\\\n")
}

pub fn latex_pmatrix(name: &str, m: &PolyMatrix) -> String {
    format!("{name} = \\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", emit_latex(m))
}

pub fn irrep_to_latex(r: &Irrep) -> String {
    format!(
        "% j = {}, basis = {} ({})\n{}\n\n{}\n\n{}\n",
        r.j,
        r.basis,
        r.basis.ordering(),
        latex_pmatrix("X", &r.x),
        latex_pmatrix("Y", &r.y),
        latex_pmatrix("H", &r.h)
    )
}

/// `align*` listing of every nonzero element.
pub fn table_to_latex(t: &ElementTable) -> String {
    let mut out = String::from("\\begin{align*}\n");
    for (sym, map) in [("H", t.h_elements()), ("X", t.x_elements())] {
        for (&(n, m), v) in map {
            if !v.is_zero() {
                out.push_str(&format!("{sym}_{{{n}}}^{{{m}}} &= {} \\\\\n", v.to_latex()));
            }
        }
    }
    out.push_str("\\end{align*}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::irrep::{diagonal_basis_irrep, verma_basis_irrep};

    #[test]
    fn bipoly_json_shape() {
        let p = BiPoly::monomial(int(-42), 0, 2);
        assert_eq!(bipoly_to_json(&p), json!([{"c": "-42", "l": 0, "h": 2}]));
        let q = &BiPoly::lambda() + &BiPoly::monomial(rat(-21, 2), 0, 2);
        assert_eq!(bipoly_from_json(&bipoly_to_json(&q), "q").unwrap(), q);
    }

    #[test]
    fn irrep_round_trip() {
        for r in [verma_basis_irrep(HalfInt::from_twice(7)).unwrap(), diagonal_basis_irrep(HalfInt::from_twice(4)).unwrap()] {
            let text = serde_json::to_string(&irrep_to_json(&r)).unwrap();
            assert_eq!(parse_irrep(&text).unwrap(), r);
        }
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(parse_irrep("{"), Err(DecodeError::Json(_))));
        assert!(matches!(parse_irrep(r#"{"schema":"other/9"}"#), Err(DecodeError::Schema(_))));
        let r = verma_basis_irrep(HalfInt::from_twice(1)).unwrap();
        let mut v = irrep_to_json(&r);
        v["X"][0][1][0]["c"] = json!("1.5");
        assert!(matches!(irrep_from_json(&v), Err(DecodeError::Field { .. })));
        let mut v = irrep_to_json(&r);
        v["j"] = json!("1");
        assert!(matches!(irrep_from_json(&v), Err(DecodeError::Field { .. })));
    }

    #[test]
    fn latex_bodies() {
        assert_eq!(emit_latex(&PolyMatrix::zeros(1, 1)), "0");
        let r = verma_basis_irrep(HalfInt::from_twice(1)).unwrap();
        assert_eq!(emit_latex(&r.x), "0 & 1 \\\\\n0 & 0");
        let d = diagonal_basis_irrep(HalfInt::from_twice(7)).unwrap();
        let body = emit_latex(&d.h);
        assert!(body.starts_with("7 & 0"));
        assert!(body.ends_with("0 & -7"));
        assert_eq!(emit_latex(&PolyMatrix::scalar(1, &BiPoly::monomial(rat(-21, 2), 1, 2))), "-\\frac{21}{2}{\\lambda}h^{2}");
    }
}
