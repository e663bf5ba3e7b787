//! JSON forms of scalars, points and chords.
//!
//! Scalars are strings in display form (`"3/7"`, `"1/2 + 1/2*sqrt(5)"`), or
//! objects `{"rational": "1/2", "surd": "1/2", "radicand": 5}`. Points are
//! self-describing: projective points are `"inf"` or a scalar, angle points
//! `{"angle": s}`, blown-up points `{"base": s}` or
//! `{"interval": {"index": j, "inner": "1/2", "anchor": s}}`, tree points
//! `{"tree": {"path": [0, 2], "end": "start"}}`. A chord is a two-element
//! array of points.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::circle::{BlownPoint, Chord, CirclePoint, ProjectivePoint, TreeEnd, TreePoint};
use crate::error::{Error, Result};
use crate::scalar::{Qs, Rational};

pub fn scalar_to_value(q: &Qs) -> Value {
    Value::String(q.to_string())
}

fn rational_from_value(v: &Value) -> Result<Rational> {
    let q = scalar_from_value(v)?;
    q.as_rational().cloned().ok_or_else(|| Error::Parse(format!("expected a rational, got {q}")))
}

pub fn scalar_from_value(v: &Value) -> Result<Qs> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n
            .as_i64()
            .map(Qs::integer)
            .ok_or_else(|| Error::Parse(format!("non-integer number {n}; write fractions as strings"))),
        Value::Object(m) => {
            for k in m.keys() {
                if !["rational", "surd", "radicand"].contains(&k.as_str()) {
                    return Err(Error::Parse(format!("unknown scalar field `{k}`")));
                }
            }
            let part = |k: &str| -> Result<Rational> {
                m.get(k).map(rational_from_value).unwrap_or_else(|| Ok(Rational::from_integer(0.into())))
            };
            let radicand = match m.get("radicand") {
                None => 0,
                Some(r) => r.as_u64().ok_or_else(|| Error::Parse("radicand must be a non-negative integer".into()))?,
            };
            Qs::new(part("rational")?, part("surd")?, radicand)
        }
        other => Err(Error::Parse(format!("bad scalar {other}"))),
    }
}

pub fn point_to_value(p: &CirclePoint) -> Value {
    match p {
        CirclePoint::Projective(ProjectivePoint::Infinity) => json!("inf"),
        CirclePoint::Projective(ProjectivePoint::Finite(x)) => scalar_to_value(x),
        CirclePoint::Angle(x) => json!({ "angle": scalar_to_value(x) }),
        CirclePoint::BlownUp(BlownPoint::Base(x)) => json!({ "base": scalar_to_value(x) }),
        CirclePoint::BlownUp(BlownPoint::Interval { index, inner, anchor }) => json!({
            "interval": { "index": index, "inner": inner.to_string(), "anchor": scalar_to_value(anchor) }
        }),
        CirclePoint::Tree(t) => json!({ "tree": { "path": t.path, "end": t.end } }),
    }
}

pub fn point_from_value(v: &Value) -> Result<CirclePoint> {
    if v.as_str() == Some("inf") {
        return Ok(CirclePoint::infinity());
    }
    let Value::Object(m) = v else {
        return Ok(CirclePoint::real(scalar_from_value(v)?));
    };
    if m.keys().any(|k| ["rational", "surd", "radicand"].contains(&k.as_str())) {
        return Ok(CirclePoint::real(scalar_from_value(v)?));
    }
    if m.len() != 1 {
        return Err(Error::Parse(format!("bad point {v}")));
    }
    let (k, inner) = m.iter().next().expect("one entry");
    match k.as_str() {
        "angle" => Ok(CirclePoint::angle(scalar_from_value(inner)?)),
        "base" => Ok(CirclePoint::BlownUp(BlownPoint::Base(scalar_from_value(inner)?))),
        "interval" => {
            let index = inner.get("index").and_then(Value::as_i64).ok_or_else(|| Error::Parse("interval needs an index".into()))?;
            let t = rational_from_value(inner.get("inner").ok_or_else(|| Error::Parse("interval needs inner".into()))?)?;
            let anchor = scalar_from_value(inner.get("anchor").ok_or_else(|| Error::Parse("interval needs anchor".into()))?)?;
            Ok(CirclePoint::BlownUp(BlownPoint::Interval { index, inner: t, anchor }))
        }
        "tree" => {
            let path: Vec<u32> = serde_json::from_value(inner.get("path").cloned().unwrap_or(Value::Null))?;
            let end: TreeEnd = serde_json::from_value(inner.get("end").cloned().unwrap_or(Value::Null))?;
            Ok(CirclePoint::Tree(TreePoint { path, end }))
        }
        other => Err(Error::Parse(format!("unknown point kind `{other}`"))),
    }
}

pub fn chord_to_value(c: &Chord) -> Value {
    json!([point_to_value(c.lo()), point_to_value(c.hi())])
}

pub fn chord_from_value(v: &Value) -> Result<Chord> {
    match v.as_array().map(Vec::as_slice) {
        Some([a, b]) => Chord::new(point_from_value(a)?, point_from_value(b)?),
        _ => Err(Error::Parse(format!("a chord is a pair of points, got {v}"))),
    }
}

macro_rules! json_serde {
    ($ty:ty, $to:ident, $from:ident) => {
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                $to(self).serialize(s)
            }
        }
        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let v = Value::deserialize(d)?;
                $from(&v).map_err(D::Error::custom)
            }
        }
    };
}

json_serde!(Qs, scalar_to_value, scalar_from_value);
json_serde!(CirclePoint, point_to_value, point_from_value);
json_serde!(Chord, chord_to_value, chord_from_value);
