//! JSON input and output.
//!
//! Arrangements are read from `{"curves": [{"type": "line", "coeffs": ["0","1","0"], "label": "H1"}, ...]}`
//! with conic coefficients ordered `[A, B, C, D, E, F]` for `Ax² + Bxy + Cy² + Dx + Ey + F`.
//! A face export carries the arrangement under `"arrangement"` and is accepted as input too.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::path::Path;

use crate::arrangement::{validate, Arrangement, Curve, CurveKind};
use crate::complex::FaceComplex;
use crate::error::Error;
use crate::numeric::point::AlgebraicPoint;
use crate::numeric::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub coeffs: Vec<CoeffValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// Coefficients may be given as strings or plain JSON integers.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffValue {
    Text(String),
    Int(i64),
}

impl CoeffValue {
    fn to_rational(&self) -> Result<Rational, Error> {
        match self {
            CoeffValue::Text(s) => parse_rational(s),
            CoeffValue::Int(i) => Ok(Rational::from_integer((*i).into())),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub curves: Vec<CurveRecord>,
}

fn curve_from_record(i: usize, r: &CurveRecord) -> Result<Curve, Error> {
    let k = r
        .coeffs
        .iter()
        .map(|c| c.to_rational())
        .collect::<Result<Vec<_>, _>>()?;
    let label = r.label.clone().unwrap_or_else(|| format!("H{}", i + 1));
    match (r.kind.as_str(), k.len()) {
        ("line", 3) => Ok(Curve::line(k[0].clone(), k[1].clone(), k[2].clone(), label)),
        ("conic", 6) => Ok(Curve::conic(std::array::from_fn(|j| k[j].clone()), label)),
        ("line", n) | ("conic", n) => Err(Error::Parse(format!(
            "curve {}: {} coefficients for a {}",
            i + 1,
            n,
            r.kind
        ))),
        (other, _) => Err(Error::Parse(format!(
            "curve {}: unknown type {other:?}",
            i + 1
        ))),
    }
}

pub fn curves_from_value(v: &Value) -> Result<Vec<Curve>, Error> {
    let body = v.get("arrangement").unwrap_or(v);
    let file: ArrangementFile =
        serde_json::from_value(body.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    file.curves
        .iter()
        .enumerate()
        .map(|(i, r)| curve_from_record(i, r))
        .collect()
}

/// Parses and validates an arrangement.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, Error> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    validate(curves_from_value(&v)?)
}

pub fn load_arrangement(path: &Path) -> Result<Arrangement, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_arrangement(&text)
}

pub fn arrangement_file(arr: &Arrangement) -> ArrangementFile {
    ArrangementFile {
        curves: arr
            .curves()
            .iter()
            .map(|c| CurveRecord {
                kind: if c.is_line() { "line" } else { "conic" }.into(),
                coeffs: c
                    .coeffs()
                    .iter()
                    .map(|r| CoeffValue::Text(format_rational(r)))
                    .collect(),
                label: Some(c.label.clone()),
            })
            .collect(),
    }
}

pub fn arrangement_json(arr: &Arrangement) -> Value {
    serde_json::to_value(arrangement_file(arr)).expect("serializable")
}

/// Exact description of a point: rational coordinates, or the defining data of its number field.
pub fn point_json(p: &AlgebraicPoint) -> Value {
    if let Some((x, y)) = p.as_rational() {
        return json!({ "x": format_rational(&x), "y": format_rational(&y) });
    }
    let a = p.field().alpha();
    let (ax, ay) = p.approx();
    json!({
        "alpha": { "poly": a.poly().to_string(), "lo": format_rational(a.lo()), "hi": format_rational(a.hi()) },
        "radicand": p.radicand().to_string(),
        "x": { "base": p.x().p.to_string(), "sqrt_coeff": p.x().q.to_string() },
        "y": { "base": p.y().p.to_string(), "sqrt_coeff": p.y().q.to_string() },
        "approx": [ax, ay],
    })
}

/// Faces, closure order and the arrangement itself.
pub fn faces_json(c: &FaceComplex) -> Value {
    let labels = c.arrangement().labels();
    json!({
        "arrangement": arrangement_json(c.arrangement()),
        "shear": format_rational(c.shear()),
        "faces": c.faces().iter().map(|f| json!({
            "id": f.id,
            "dim": f.dim,
            "support": f.support.iter().map(|&k| labels[k].clone()).collect::<Vec<_>>(),
            "signs": f.signs.to_string(),
            "bounded": f.bounded,
            "sample": point_json(&f.sample),
        })).collect::<Vec<_>>(),
        "order": c.order_pairs(),
    })
}

pub fn curve_equation(c: &Curve) -> String {
    let term = |k: &Rational, m: &str, out: &mut Vec<String>| {
        if !num::Zero::is_zero(k) {
            let c = match format_rational(k).as_str() {
                "1" if !m.is_empty() => String::new(),
                "-1" if !m.is_empty() => "-".into(),
                s => s.to_string(),
            };
            out.push(format!("{c}{m}"));
        }
    };
    let mut out = Vec::new();
    match &c.kind {
        CurveKind::Line([a, b, d]) => {
            term(a, "x", &mut out);
            term(b, "y", &mut out);
            term(d, "", &mut out);
        }
        CurveKind::Conic(k) => {
            for (coef, m) in k.iter().zip(["x^2", "xy", "y^2", "x", "y", ""]) {
                term(coef, m, &mut out);
            }
        }
    }
    format!("{} = 0", out.join(" + ").replace("+ -", "- "))
}
