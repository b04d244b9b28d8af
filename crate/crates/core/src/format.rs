//! JSON file formats.
//!
//! Character:
//!
//! ```json
//! {"root_datum": "A2", "terms": [{"coeff": 1, "weight": [1, 0]}]}
//! ```
//!
//! G-decomposition:
//!
//! ```json
//! {"entries": [{"highest_weight": [1, 1], "mult": 1}], "root_datum": "A2"}
//! ```
//!
//! Weights are in fundamental-weight coordinates and coefficients are
//! arbitrary-size integers. Input terms may come in any order (repeated
//! weights are summed); output is pretty-printed with sorted keys, terms
//! from the leading term down and entries in lexicographic weight order.

use std::str::FromStr;
use std::sync::Arc;

use serde_json::{json, Map, Number, Value};

use crate::charring::CharacterOf;
use crate::descent::GDecompositionOf;
use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, Weight};
use crate::scalar::Coefficient;

fn fmt_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn coeff_to_json<C: Coefficient>(c: &C) -> Value {
    Value::Number(Number::from_str(&c.to_string()).expect("integers are valid JSON numbers"))
}

fn coeff_from_json<C: Coefficient>(v: &Value, what: &str) -> Result<C> {
    let n = v.as_number().ok_or_else(|| fmt_err(format!("{what} must be an integer")))?;
    C::from_str_radix(&n.to_string(), 10).map_err(|_| fmt_err(format!("{what} must be an integer, got {n}")))
}

fn weight_from_json(v: &Value, rank: usize, what: &str) -> Result<Weight> {
    let arr = v.as_array().ok_or_else(|| fmt_err(format!("{what} must be an array of integers")))?;
    if arr.len() != rank {
        return Err(Error::RankMismatch { expected: rank, found: arr.len() });
    }
    arr.iter()
        .map(|x| x.as_i64().ok_or_else(|| fmt_err(format!("{what} entries must be 64-bit integers"))))
        .collect::<Result<Vec<_>>>()
        .map(Weight::new)
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| fmt_err(format!("{what} must be a JSON object")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| fmt_err(format!("missing field {key:?}")))
}

fn root_datum_field(obj: &Map<String, Value>) -> Result<Arc<RootDatum>> {
    let tag = field(obj, "root_datum")?.as_str().ok_or_else(|| fmt_err("root_datum must be a string"))?;
    Ok(Arc::new(tag.parse()?))
}

pub fn character_to_json<C: Coefficient>(f: &CharacterOf<C>) -> Value {
    let terms: Vec<Value> =
        f.sorted_terms().into_iter().map(|(w, c)| json!({"weight": w.coords(), "coeff": coeff_to_json(c)})).collect();
    json!({"root_datum": f.root_datum().tag(), "terms": terms})
}

pub fn character_from_json<C: Coefficient>(v: &Value) -> Result<CharacterOf<C>> {
    let obj = object(v, "character")?;
    let rd = root_datum_field(obj)?;
    let terms = field(obj, "terms")?.as_array().ok_or_else(|| fmt_err("terms must be an array"))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let t = object(t, "term")?;
        let weight = weight_from_json(field(t, "weight")?, rd.rank(), "weight")?;
        let coeff: C = coeff_from_json(field(t, "coeff")?, "coeff")?;
        if coeff.is_zero() {
            return Err(fmt_err(format!("zero coefficient at weight {weight}")));
        }
        parsed.push((weight, coeff));
    }
    CharacterOf::from_terms(rd, parsed)
}

pub fn decomposition_to_json<C: Coefficient>(d: &GDecompositionOf<C>) -> Value {
    let entries: Vec<Value> =
        d.entries().map(|(w, m)| json!({"highest_weight": w.coords(), "mult": coeff_to_json(m)})).collect();
    json!({"root_datum": d.root_datum().tag(), "entries": entries})
}

pub fn decomposition_from_json<C: Coefficient>(v: &Value) -> Result<GDecompositionOf<C>> {
    let obj = object(v, "decomposition")?;
    let rd = root_datum_field(obj)?;
    let entries = field(obj, "entries")?.as_array().ok_or_else(|| fmt_err("entries must be an array"))?;
    let mut dec = GDecompositionOf::new(rd.clone());
    for e in entries {
        let e = object(e, "entry")?;
        let weight = weight_from_json(field(e, "highest_weight")?, rd.rank(), "highest_weight")?;
        let mult: C = coeff_from_json(field(e, "mult")?, "mult")?;
        if mult.is_zero() {
            return Err(fmt_err(format!("zero multiplicity at weight {weight}")));
        }
        dec.add(weight, mult)?;
    }
    Ok(dec)
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializing a Value cannot fail");
    s.push('\n');
    s
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| fmt_err(format!("invalid JSON: {e}")))
}
