//! Browser bindings: braid word matrices, order certificates and the
//! projective closure of the half-twist group, each returned as a JSON
//! string.
//!
//! The `*_json` functions are plain Rust and run natively in tests; the
//! exported wrappers only convert errors to JavaScript exceptions.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use skein_mcg::json::MatrixJson;
use skein_mcg::order::{certify, group_closure, verify_certificate, CertifyOptions, ClosureResult};
use skein_mcg::{BraidWord, RingSelector, RootOfUnityChoice, SkeinModule, SkeinParams};

/// Largest point count accepted from the page; keeps a click responsive.
pub const MAX_POINTS: u32 = 10;

/// Closure cap used by the page.
pub const MAX_CLOSURE_CAP: u32 = 20_000;

fn module(points: u32) -> Result<SkeinModule, String> {
    if points < 2 || points % 2 != 0 || points > MAX_POINTS {
        return Err(format!(
            "points must be even, between 2 and {MAX_POINTS}; got {points}"
        ));
    }
    SkeinModule::new(points as usize / 2).map_err(|e| e.to_string())
}

fn ring(text: &str) -> Result<RingSelector, String> {
    match text.trim() {
        "" | "symbolic" => Ok(RingSelector::Symbolic),
        r => r
            .parse::<RootOfUnityChoice>()
            .map(RingSelector::root)
            .map_err(|e| e.to_string()),
    }
}

fn root(text: &str) -> Result<RootOfUnityChoice, String> {
    ring(text)?
        .choice()
        .ok_or_else(|| "a root N:j is required here".to_string())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// Matrix of `word` on `points` points, symbolic (`"symbolic"`) or at
/// `A = zeta_N^j` (`"N:j"`).
pub fn matrix_json(points: u32, word: &str, ring_text: &str) -> Result<String, String> {
    let module = module(points)?;
    let word = BraidWord::parse(module.n(), word).map_err(|e| e.to_string())?;
    let ring = ring(ring_text)?;
    let json = match ring.choice() {
        None => {
            let m = module
                .word_matrix(&SkeinParams::symbolic(), &word)
                .map_err(|e| e.to_string())?;
            MatrixJson::new(&word, ring, module.basis(), &m)
        }
        Some(c) => {
            let m = module
                .word_matrix(&SkeinParams::at_root(c), &word)
                .map_err(|e| e.to_string())?;
            MatrixJson::new(&word, ring, module.basis(), &m)
        }
    };
    to_json(&json)
}

/// Re-verified projective order certificate of `word` at a root.
pub fn certify_json(points: u32, word: &str, root_text: &str) -> Result<String, String> {
    let module = module(points)?;
    let word = BraidWord::parse(module.n(), word).map_err(|e| e.to_string())?;
    let g = module
        .word_matrix(&SkeinParams::at_root(root(root_text)?), &word)
        .map_err(|e| e.to_string())?;
    let cert = certify(&g, &CertifyOptions::default()).map_err(|e| e.to_string())?;
    verify_certificate(&g, &cert).map_err(|e| e.to_string())?;
    to_json(&cert.to_json())
}

#[derive(Serialize)]
struct ClosureJson {
    points: u32,
    root: String,
    cap: u32,
    result: &'static str,
    order: Option<usize>,
}

/// Size of the projective image of `<sigma_1, ..., sigma_{2n-1}>`, or a
/// cap-exceeded marker.
pub fn closure_json(points: u32, root_text: &str, cap: u32) -> Result<String, String> {
    let module = module(points)?;
    let choice = root(root_text)?;
    let cap = cap.clamp(1, MAX_CLOSURE_CAP);
    let params = SkeinParams::at_root(choice);
    let gens = (1..2 * module.n())
        .map(|i| module.generator_matrix(&params, i, 1))
        .collect::<skein_mcg::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    if gens.is_empty() {
        // one point pair: the trivial group
        return to_json(&ClosureJson {
            points,
            root: choice.to_string(),
            cap,
            result: "finite",
            order: Some(1),
        });
    }
    let (result, order) = match group_closure(&gens, cap as usize).map_err(|e| e.to_string())? {
        ClosureResult::Finite { order } => ("finite", Some(order)),
        ClosureResult::CapExceeded { .. } => ("cap_exceeded", None),
    };
    to_json(&ClosureJson {
        points,
        root: choice.to_string(),
        cap,
        result,
        order,
    })
}

#[wasm_bindgen(js_name = matrixJson)]
pub fn matrix_js(points: u32, word: &str, ring: &str) -> Result<String, JsError> {
    matrix_json(points, word, ring).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = certifyJson)]
pub fn certify_js(points: u32, word: &str, root: &str) -> Result<String, JsError> {
    certify_json(points, word, root).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = closureJson)]
pub fn closure_js(points: u32, root: &str, cap: u32) -> Result<String, JsError> {
    closure_json(points, root, cap).map_err(|e| JsError::new(&e))
}
