//! Deterministic JSON encoding of results. Coefficients are exact strings
//! (`"3/4"`), polynomials carry their monomial lists; term lists follow
//! the basis order and object keys are sorted.

use crate::birkhoff::Partition;
use crate::combinat::{Composition, PackedWord, Permutation, PlaneForest};
use crate::lincomb::LinComb;
use crate::polyring::{format_rational, LaurentPoly, MultiPoly, Rational, RationalFn};
use crate::ring::Ring;
use serde_json::{json, Map, Value};

/// Coefficient types that serialize exactly.
pub trait JsonCoeff {
    fn to_json(&self) -> Value;
}

impl JsonCoeff for i64 {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl JsonCoeff for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }
}

pub fn poly_terms(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let exps: Map<String, Value> = m
                .pairs()
                .iter()
                .map(|(v, e)| (v.name(), json!(e)))
                .collect();
            json!({ "coeff": format_rational(c), "monomial": exps })
        })
        .collect();
    Value::Array(terms)
}

impl JsonCoeff for MultiPoly {
    fn to_json(&self) -> Value {
        json!({ "text": self.to_string(), "terms": poly_terms(self) })
    }
}

impl JsonCoeff for RationalFn {
    fn to_json(&self) -> Value {
        json!({
            "text": self.to_string(),
            "num": poly_terms(self.num()),
            "den": poly_terms(self.den()),
        })
    }
}

impl JsonCoeff for LaurentPoly {
    fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(e, c)| json!({ "z": e, "coeff": c.to_json() }))
            .collect();
        json!({ "text": self.to_string(), "terms": terms })
    }
}

/// Basis labels: the field name used in term objects and the label text.
pub trait JsonKey {
    const FIELD: &'static str;
    fn label(&self) -> String;
}

impl JsonKey for PlaneForest {
    const FIELD: &'static str = "forest";
    fn label(&self) -> String {
        self.code_string()
    }
}

impl JsonKey for Composition {
    const FIELD: &'static str = "composition";
    fn label(&self) -> String {
        self.to_string()
    }
}

impl JsonKey for Permutation {
    const FIELD: &'static str = "permutation";
    fn label(&self) -> String {
        self.to_string()
    }
}

impl JsonKey for PackedWord {
    const FIELD: &'static str = "word";
    fn label(&self) -> String {
        self.to_string()
    }
}

impl JsonKey for Partition {
    const FIELD: &'static str = "partition";
    fn label(&self) -> String {
        self.to_string()
    }
}

impl JsonKey for i32 {
    const FIELD: &'static str = "exponent";
    fn label(&self) -> String {
        self.to_string()
    }
}

/// `{"basis": .., "terms": [{<field>: label, "coeff": ..}, ..]}`.
pub fn lincomb<K: JsonKey + Ord + Clone, C: Ring + JsonCoeff>(
    basis: &str,
    e: &LinComb<K, C>,
) -> Value {
    let terms: Vec<Value> = e
        .iter()
        .map(|(k, c)| {
            let mut m = Map::new();
            m.insert(K::FIELD.to_string(), Value::String(k.label()));
            m.insert("coeff".to_string(), c.to_json());
            Value::Object(m)
        })
        .collect();
    json!({ "basis": basis, "terms": terms })
}

/// Pretty-printed with a trailing newline; stable across runs.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
