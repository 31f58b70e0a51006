//! Browser bindings for `multcode`.
//!
//! The plain functions take and return indices and strings so they can be
//! tested natively; the `#[wasm_bindgen]` wrappers only convert errors.

use multcode::cli::{decompose_report, params_report, CodeSpec};
use multcode::{Message, MultCode, MVPoly};
use wasm_bindgen::prelude::*;

fn build(p: u32, t: u32, m: u32, s: u32, d: i32) -> Result<(CodeSpec, MultCode), String> {
    let spec = CodeSpec {
        p: p.into(),
        t: t.into(),
        m: m as usize,
        s,
        d: d.into(),
    };
    let code = spec.build().map_err(|e| e.to_string())?;
    Ok((spec, code))
}

/// The `params` report of the command-line tool.
pub fn params(p: u32, t: u32, m: u32, s: u32, d: i32) -> Result<String, String> {
    let (spec, code) = build(p, t, m, s, d)?;
    Ok(params_report(&spec, &code))
}

/// Position-major codeword indices for a message of `k` indices.
pub fn encode(p: u32, t: u32, m: u32, s: u32, d: i32, message: &[u32]) -> Result<Vec<u32>, String> {
    let (_, code) = build(p, t, m, s, d)?;
    let symbols = message
        .iter()
        .map(|&x| code.field().element(x))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let codeword = code
        .systematic_encode(&Message::new(symbols))
        .map_err(|e| e.to_string())?;
    Ok(codeword.symbols().iter().map(|x| x.index()).collect())
}

/// For each codeword symbol, the message position it carries or -1.
pub fn information_map(p: u32, t: u32, m: u32, s: u32, d: i32) -> Result<Vec<i32>, String> {
    let (_, code) = build(p, t, m, s, d)?;
    let sigma = code.sigma();
    let mut map = vec![-1; code.length() * sigma];
    for (k, &(slot, point)) in code.information_set().iter().enumerate() {
        map[point * sigma + slot] = k as i32;
    }
    Ok(map)
}

/// Point coordinates as field indices, `m` per point, in codeword order.
pub fn points(p: u32, t: u32, m: u32, s: u32, d: i32) -> Result<Vec<u32>, String> {
    let (_, code) = build(p, t, m, s, d)?;
    Ok(code.points().iter().flatten().map(|x| x.index()).collect())
}

/// Derivative orders `j` labelling the symbols of each position.
pub fn slot_labels(p: u32, t: u32, m: u32, s: u32, d: i32) -> Result<Vec<String>, String> {
    let (_, code) = build(p, t, m, s, d)?;
    Ok(code.slots().iter().map(|j| j.to_string()).collect())
}

/// The `decompose` listing for a polynomial in the `c:e1,...,em;...` format.
pub fn decompose(p: u32, t: u32, m: u32, s: u32, d: i32, poly: &str) -> Result<String, String> {
    let (_, code) = build(p, t, m, s, d)?;
    let poly = MVPoly::parse_text(code.field(), code.num_vars(), poly).map_err(|e| e.to_string())?;
    decompose_report(&code, &poly).map_err(|e| e.to_string())
}

fn js(e: String) -> JsValue {
    JsValue::from_str(&e)
}

#[wasm_bindgen(js_name = codeParams)]
pub fn code_params(p: u32, t: u32, m: u32, s: u32, d: i32) -> Result<String, JsValue> {
    params(p, t, m, s, d).map_err(js)
}

#[wasm_bindgen(js_name = systematicEncode)]
pub fn systematic_encode(p: u32, t: u32, m: u32, s: u32, d: i32, message: Vec<u32>) -> Result<Vec<u32>, JsValue> {
    encode(p, t, m, s, d, &message).map_err(js)
}

#[wasm_bindgen(js_name = informationMap)]
pub fn information_map_js(p: u32, t: u32, m: u32, s: u32, d: i32) -> Result<Vec<i32>, JsValue> {
    information_map(p, t, m, s, d).map_err(js)
}

#[wasm_bindgen(js_name = codePoints)]
pub fn points_js(p: u32, t: u32, m: u32, s: u32, d: i32) -> Result<Vec<u32>, JsValue> {
    points(p, t, m, s, d).map_err(js)
}

#[wasm_bindgen(js_name = slotLabels)]
pub fn slot_labels_js(p: u32, t: u32, m: u32, s: u32, d: i32) -> Result<Vec<String>, JsValue> {
    slot_labels(p, t, m, s, d).map_err(js)
}

#[wasm_bindgen(js_name = decompose)]
pub fn decompose_js(p: u32, t: u32, m: u32, s: u32, d: i32, poly: &str) -> Result<String, JsValue> {
    decompose(p, t, m, s, d, poly).map_err(js)
}
