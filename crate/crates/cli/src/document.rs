//! Set-document parsing and serialization.
//!
//! A document names a few interval unions and scalar parameters:
//!
//! ```json
//! {"sets": {"A": [["0", "1"]], "B": [["0", "1/2"], ["2", "3"]]},
//!  "params": {"tau": "1/4"}}
//! ```
//!
//! Endpoints and parameters are integers or `"p/q"` strings; floats are
//! rejected so the document stays exact. Parsing canonicalizes every set,
//! and `parse -> canonicalize -> serialize -> parse` is a fixed point.

use anyhow::{anyhow, bail, Result};
use rslab_core::interval::IntervalUnion;
use rslab_core::rational::{parse_rational, Rational};
use serde_json::{Map, Value};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SetDocument {
    pub sets: BTreeMap<String, IntervalUnion>,
    pub params: BTreeMap<String, Rational>,
}

fn rational_at(value: &Value, location: &str) -> Result<Rational> {
    match value {
        Value::String(s) => {
            parse_rational(s).ok_or_else(|| anyhow!("{location}: cannot parse \"{s}\" as p/q"))
        }
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else {
                bail!("{location}: only integers and \"p/q\" strings are exact, got {n}")
            }
        }
        other => bail!("{location}: expected an integer or \"p/q\" string, got {other}"),
    }
}

pub fn parse_document(text: &str) -> Result<SetDocument> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| anyhow!("invalid JSON: {e}"))?;
    let obj = root
        .as_object()
        .ok_or_else(|| anyhow!("document root must be an object"))?;

    let mut doc = SetDocument::default();
    let sets = obj
        .get("sets")
        .ok_or_else(|| anyhow!("document is missing the \"sets\" object"))?
        .as_object()
        .ok_or_else(|| anyhow!("\"sets\" must be an object"))?;
    for (name, entry) in sets {
        let pairs = entry
            .as_array()
            .ok_or_else(|| anyhow!("sets.{name}: expected an array of [lo, hi] pairs"))?;
        let mut raw = Vec::with_capacity(pairs.len());
        for (idx, pair) in pairs.iter().enumerate() {
            let location = format!("sets.{name}[{idx}]");
            let ends = pair
                .as_array()
                .ok_or_else(|| anyhow!("{location}: expected a [lo, hi] pair"))?;
            if ends.len() != 2 {
                bail!("{location}: expected exactly two endpoints, got {}", ends.len());
            }
            let lo = rational_at(&ends[0], &location)?;
            let hi = rational_at(&ends[1], &location)?;
            if lo > hi {
                bail!("{location}: invalid endpoint pair ({lo}, {hi}): lo > hi");
            }
            raw.push((lo, hi));
        }
        let union = IntervalUnion::normalize(raw)
            .map_err(|e| anyhow!("sets.{name}: {e}"))?;
        doc.sets.insert(name.clone(), union);
    }

    if let Some(params) = obj.get("params") {
        let params = params
            .as_object()
            .ok_or_else(|| anyhow!("\"params\" must be an object"))?;
        for (name, value) in params {
            let location = format!("params.{name}");
            doc.params.insert(name.clone(), rational_at(value, &location)?);
        }
    }
    Ok(doc)
}

pub fn document_to_value(doc: &SetDocument) -> Value {
    let mut sets = Map::new();
    for (name, union) in &doc.sets {
        let pairs: Vec<Value> = union
            .components()
            .iter()
            .map(|c| {
                Value::Array(vec![
                    Value::String(c.lo.to_string()),
                    Value::String(c.hi.to_string()),
                ])
            })
            .collect();
        sets.insert(name.clone(), Value::Array(pairs));
    }
    let mut root = Map::new();
    root.insert("sets".into(), Value::Object(sets));
    if !doc.params.is_empty() {
        let mut params = Map::new();
        for (name, value) in &doc.params {
            params.insert(name.clone(), Value::String(value.to_string()));
        }
        root.insert("params".into(), Value::Object(params));
    }
    Value::Object(root)
}

impl SetDocument {
    pub fn require_set(&self, name: &str) -> Result<&IntervalUnion> {
        self.sets
            .get(name)
            .ok_or_else(|| anyhow!("document is missing set \"{name}\""))
    }

    /// First present among `names`, to allow aliases like C/E.
    pub fn require_set_any(&self, names: &[&str]) -> Result<&IntervalUnion> {
        for n in names {
            if let Some(s) = self.sets.get(*n) {
                return Ok(s);
            }
        }
        Err(anyhow!("document is missing set \"{}\"", names.join("\" or \"")))
    }

    pub fn require_param(&self, name: &str) -> Result<&Rational> {
        self.params
            .get(name)
            .ok_or_else(|| anyhow!("document is missing parameter \"{name}\""))
    }
}
