//! Canonical `hodgeclass/v1` serialization.
//!
//! `{"format":"hodgeclass/v1","entries":[[n,p,q,m],...]}` with entries in
//! canonical order and no zero multiplicity, compact, no whitespace. Equal
//! classes serialize to identical bytes.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Number, Value};
use thiserror::Error;

use super::{Cell, HodgeClass};

pub const HODGECLASS_FORMAT: &str = "hodgeclass/v1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected format \"{expected}\", found {found}")]
    WrongFormat { expected: &'static str, found: String },
    #[error("malformed document: {0}")]
    Malformed(String),
}

pub(crate) fn int_value(m: &BigInt) -> Value {
    // arbitrary_precision keeps the decimal text verbatim
    Value::Number(Number::from_str(&m.to_string()).expect("decimal integer is a JSON number"))
}

impl HodgeClass {
    pub fn to_json_value(&self) -> Value {
        let entries = self
            .iter()
            .map(|(c, m)| {
                Value::Array(vec![
                    Value::from(c.degree),
                    Value::from(c.p),
                    Value::from(c.q),
                    int_value(m),
                ])
            })
            .collect();
        let mut obj = Map::new();
        obj.insert("format".into(), Value::from(HODGECLASS_FORMAT));
        obj.insert("entries".into(), Value::Array(entries));
        Value::Object(obj)
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(value: &Value) -> Result<HodgeClass, FormatError> {
        let obj = value
            .as_object()
            .ok_or_else(|| FormatError::Malformed("expected an object".into()))?;
        match obj.get("format") {
            Some(Value::String(s)) if s == HODGECLASS_FORMAT => {}
            other => {
                return Err(FormatError::WrongFormat {
                    expected: HODGECLASS_FORMAT,
                    found: other.map_or("nothing".into(), |v| v.to_string()),
                })
            }
        }
        let entries = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| FormatError::Malformed("missing \"entries\" array".into()))?;
        let mut raw = Vec::with_capacity(entries.len());
        for (i, e) in entries.iter().enumerate() {
            let row = e
                .as_array()
                .filter(|r| r.len() == 4)
                .ok_or_else(|| FormatError::Malformed(format!("entry {i} is not [n,p,q,m]")))?;
            let small = |v: &Value| -> Result<i32, FormatError> {
                v.as_i64()
                    .and_then(|x| i32::try_from(x).ok())
                    .ok_or_else(|| FormatError::Malformed(format!("entry {i}: bad index {v}")))
            };
            let m = match &row[3] {
                Value::Number(n) => BigInt::from_str(&n.to_string()).ok(),
                _ => None,
            }
            .ok_or_else(|| FormatError::Malformed(format!("entry {i}: bad multiplicity {}", row[3])))?;
            raw.push((Cell::new(small(&row[0])?, small(&row[1])?, small(&row[2])?), m));
        }
        Ok(HodgeClass::from_cells(raw))
    }

    pub fn from_json(text: &str) -> Result<HodgeClass, FormatError> {
        let value: Value = serde_json::from_str(text)?;
        HodgeClass::from_json_value(&value)
    }
}

impl Serialize for HodgeClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_json_value().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HodgeClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(deserializer)?;
        HodgeClass::from_json_value(&value).map_err(serde::de::Error::custom)
    }
}
