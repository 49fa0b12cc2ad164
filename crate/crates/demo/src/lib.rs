//! Browser bindings for the static demo page in `www/`.
//!
//! Each exported function takes user text, returns a JSON string, and throws a
//! JS error with a readable message on bad input. The plain-Rust versions are
//! kept separate so they can be tested natively.

use abelian_cremona::classify::{classify, shipped_k3_groups};
use abelian_cremona::extension::enumerate_extensions_capped;
use abelian_cremona::lr::lr_product;
use abelian_cremona::notation::parse_group;
use abelian_cremona::Partition;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Middles beyond this are not rendered.
const EXTENSION_CAP: usize = 200;

fn partition_rows(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn lr_product_value(mu: &str, nu: &str) -> Result<Value, String> {
    let mu: Partition = mu
        .trim()
        .parse()
        .map_err(|e| format!("first partition: {e}"))?;
    let nu: Partition = nu
        .trim()
        .parse()
        .map_err(|e| format!("second partition: {e}"))?;
    let terms: Vec<Value> = lr_product(&mu, &nu)
        .iter()
        .map(|(p, c)| json!({"partition": p.to_string(), "rows": partition_rows(p), "coefficient": c}))
        .collect();
    Ok(json!({
        "mu": {"partition": mu.to_string(), "rows": partition_rows(&mu)},
        "nu": {"partition": nu.to_string(), "rows": partition_rows(&nu)},
        "terms": terms,
    }))
}

pub fn classify_value(group: &str) -> Result<Value, String> {
    let g = parse_group(group).map_err(|e| e.to_string())?;
    let k3 = shipped_k3_groups();
    let verdict = classify(&g, Some(&k3)).map_err(|e| e.to_string())?;
    let mut v = serde_json::to_value(&verdict).map_err(|e| e.to_string())?;
    let sylow: Vec<Value> = g
        .sylow_types()
        .map(|(p, l)| json!({"prime": p, "partition": l.to_string(), "rows": partition_rows(l)}))
        .collect();
    v["sylow"] = Value::Array(sylow);
    v["text"] = Value::String(verdict.to_string());
    Ok(v)
}

pub fn extensions_value(sub: &str, quot: &str) -> Result<Value, String> {
    let h = parse_group(sub).map_err(|e| format!("subgroup: {e}"))?;
    let k = parse_group(quot).map_err(|e| format!("quotient: {e}"))?;
    let res = enumerate_extensions_capped(&h, &k, Some(EXTENSION_CAP));
    serde_json::to_value(&res).map_err(|e| e.to_string())
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

/// `s_mu * s_nu` as `{mu, nu, terms: [{partition, rows, coefficient}]}`.
#[wasm_bindgen]
pub fn lr_product_json(mu: &str, nu: &str) -> Result<String, JsError> {
    to_js(lr_product_value(mu, nu))
}

/// Full classification verdict of a group expression, against the shipped K3 list.
#[wasm_bindgen]
pub fn classify_json(group: &str) -> Result<String, JsError> {
    to_js(classify_value(group))
}

/// Middle groups of `0 -> sub -> G -> quot -> 0`.
#[wasm_bindgen]
pub fn extensions_json(sub: &str, quot: &str) -> Result<String, JsError> {
    to_js(extensions_value(sub, quot))
}
