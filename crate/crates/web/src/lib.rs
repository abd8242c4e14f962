//! WebAssembly bindings for the browser explorer in `www/`.
//!
//! Each exported function returns a JSON string. The `*_report` functions
//! hold the logic and are plain Rust so they can be tested natively.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use auslab_core::invariants::invariant_basis;
use auslab_core::preproj::hilbert_with_cap;
use auslab_core::smash::{auslander_verdict, default_auslander_degree};
use auslab_core::{parse_group, QuiverA};

/// Keeps the page responsive.
pub const MAX_N: usize = 8;
pub const MAX_DEGREE: usize = 48;
const GROUP_CAP: usize = 256;
/// Degrees checked against the relation-ideal oracle; beyond this the
/// counts come from normal forms.
const ORACLE_DEGREE: usize = 10;

fn check_sizes(n: usize, degree: usize) -> Result<(), String> {
    QuiverA::new(n).map_err(|e| e.to_string())?;
    if n > MAX_N {
        return Err(format!("n is limited to {MAX_N} in the browser"));
    }
    if degree > MAX_DEGREE {
        return Err(format!("degree is limited to {MAX_DEGREE} in the browser"));
    }
    Ok(())
}

/// Hilbert series of `R`.
pub fn hilbert_report(n: usize, degree: usize) -> Result<Value, String> {
    check_sizes(n, degree)?;
    let q = QuiverA::new(n).map_err(|e| e.to_string())?;
    let rep = hilbert_with_cap(&q, degree, ORACLE_DEGREE);
    Ok(json!({
        "n": n,
        "totals": rep.total,
        "matrix": rep.matrix,
        "oracle_degree": degree.min(ORACLE_DEGREE),
        "recurrence_holds": rep.recurrence_failure(&q).is_none(),
    }))
}

/// Identity-component dims and verdict; `degree = 0` picks the default cutoff.
pub fn auslander_report(n: usize, group: &str, degree: usize) -> Result<Value, String> {
    check_sizes(n, degree)?;
    let g = parse_group(group, n, GROUP_CAP).map_err(|e| e.to_string())?;
    let d = if degree == 0 {
        default_auslander_degree(&g).min(MAX_DEGREE)
    } else {
        degree
    };
    let rep = auslander_verdict(&g, d).map_err(|e| e.to_string())?;
    Ok(json!({
        "n": n,
        "group": group,
        "order": g.order(),
        "descriptor": rep.descriptor.kind.to_string(),
        "degree": d,
        "dims": rep.dims,
        "growth": rep.growth.kind.to_string(),
        "first_zero_degree": rep.growth.first_zero_degree,
        "pertinency": rep.pertinency,
        "verdict": rep.verdict.to_string(),
        "classifier": rep.classifier.map(|c| c.to_string()),
        "agree": rep.agree,
    }))
}

/// `dim (R^G)_d`, plus parity blocks for even `n`.
pub fn invariants_report(n: usize, group: &str, degree: usize) -> Result<Value, String> {
    check_sizes(n, degree)?;
    let g = parse_group(group, n, GROUP_CAP).map_err(|e| e.to_string())?;
    let basis = invariant_basis(&g, degree);
    let mut out = json!({ "n": n, "group": group, "order": g.order(), "dims": basis.dims() });
    if n % 2 == 0 {
        let blocks: Vec<[[usize; 2]; 2]> = (0..=degree).map(|d| basis.parity_block_dims(d)).collect();
        out["parity_blocks"] = json!(blocks);
    }
    Ok(out)
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hilbert_json(n: usize, degree: usize) -> Result<String, JsError> {
    to_js(hilbert_report(n, degree))
}

#[wasm_bindgen]
pub fn auslander_json(n: usize, group: &str, degree: usize) -> Result<String, JsError> {
    to_js(auslander_report(n, group, degree))
}

#[wasm_bindgen]
pub fn invariants_json(n: usize, group: &str, degree: usize) -> Result<String, JsError> {
    to_js(invariants_report(n, group, degree))
}
