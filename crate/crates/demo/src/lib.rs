//! Browser bindings for the `www/` demo page.
//!
//! Three operations, each taking text from the page and returning JSON:
//! diagram inspection, tableau standardization, and the fiber Gröbner basis
//! of `r` copies of a diagram. The plain functions are what the native tests
//! exercise; the `#[wasm_bindgen]` wrappers only convert errors.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use ferrers_core::groebner::{inter_reduce, is_groebner};
use ferrers_core::oracle::{verify_candidate, OracleBudget, ToricInstance};
use ferrers_core::presentation::fiber_candidate;
use ferrers_core::{FerrersDiagram, Tableau};

/// Keeps the browser responsive: the page refuses bigger oracle runs.
const DEMO_MAX_MONOMIALS: usize = 200_000;
const DEMO_MAX_POINTS: usize = 60;

fn coords(d: &FerrersDiagram) -> Vec<Vec<u32>> {
    d.points().map(|p| p.coords().to_vec()).collect()
}

/// Points, maximal points and the standardizability verdict of a diagram given as
/// `{"dimension": n, "generators": [[...], ...]}`.
pub fn diagram_info(spec: &str) -> Result<Value, String> {
    let d = FerrersDiagram::from_json(spec).map_err(|e| e.to_string())?;
    let w = d.standardizability_witness();
    Ok(json!({
        "dimension": d.dimension(),
        "size": d.len(),
        "points": coords(&d),
        "maximal_points": d.maximal_points().iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
        "rectangular": d.is_rectangular(),
        "standardizable": w.is_none(),
        "witness": w.map(|w| json!({
            "a": w.a.coords(), "b": w.b.coords(), "k": w.k, "missing": w.missing.coords(),
        })),
    }))
}

/// Sorts the rows into σ-decreasing order and standardizes.
pub fn standardize_tableau(text: &str) -> Result<Value, String> {
    let t = Tableau::parse(text).map_err(|e| e.to_string())?;
    let sorted = t.sort_rows();
    let s = sorted.standardize().map_err(|e| e.to_string())?;
    Ok(json!({
        "input_semi_standard": t.is_semi_standard(),
        "input_standard": t == s,
        "rows": s.rows(),
        "moved": s.rows().iter().zip(sorted.rows()).map(|(a, b)| a != b).collect::<Vec<_>>(),
    }))
}

/// Interchange binomials of `D × [r]`, reduced, with the Gröbner check and
/// (when small enough) the degree-3 kernel comparison.
pub fn fiber_basis(spec: &str, r: u32) -> Result<Value, String> {
    let d = FerrersDiagram::from_json(spec).map_err(|e| e.to_string())?;
    if d.len() * r as usize > DEMO_MAX_POINTS {
        return Err(format!("the demo is limited to {DEMO_MAX_POINTS} T-variables; use the command-line tool"));
    }
    let inst = ToricInstance::fiber(&d, r).map_err(|e| e.to_string())?;
    let cand = fiber_candidate(&d, r).map_err(|e| e.to_string())?;
    let report = is_groebner(&cand);
    let reduced = inter_reduce(&cand);
    let u = inst.universe();
    let budget = OracleBudget { max_monomials: DEMO_MAX_MONOMIALS, ..OracleBudget::default() };
    let verification = match verify_candidate(&cand, &inst, 3, &budget) {
        Ok(rep) => serde_json::to_value(rep).map_err(|e| e.to_string())?,
        Err(e) => json!({ "skipped": e.to_string() }),
    };
    Ok(json!({
        "variables": u.t_count(),
        "candidate_size": cand.len(),
        "reduced": reduced.elements().iter().map(|b| u.render_binomial(reduced.order(), b)).collect::<Vec<_>>(),
        "is_groebner": report.is_groebner,
        "initial_squarefree": report.initial_squarefree,
        "failing_spair": report.failing_spair.map(|p| json!({
            "f": u.render_binomial(cand.order(), &p.f),
            "g": u.render_binomial(cand.order(), &p.g),
            "remainder": u.render_binomial(cand.order(), &p.remainder),
        })),
        "verification": verification,
    }))
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = diagramInfo)]
pub fn diagram_info_js(spec: &str) -> Result<String, JsValue> {
    to_js(diagram_info(spec))
}

#[wasm_bindgen(js_name = standardizeTableau)]
pub fn standardize_tableau_js(text: &str) -> Result<String, JsValue> {
    to_js(standardize_tableau(text))
}

#[wasm_bindgen(js_name = fiberBasis)]
pub fn fiber_basis_js(spec: &str, r: u32) -> Result<String, JsValue> {
    to_js(fiber_basis(spec, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ferrers_core::fixtures;

    const SMALLEST_3D: &str = r#"{"dimension": 3, "generators": [[1,3,3],[2,2,3],[2,3,2],[3,1,2],[3,2,1]]}"#;

    #[test]
    fn info_of_the_20_point_diagram() {
        let v = diagram_info(SMALLEST_3D).unwrap();
        assert_eq!(v["size"], 20);
        assert_eq!(v["standardizable"], true);
        assert_eq!(v["maximal_points"].as_array().unwrap().len(), 5);
        assert!(v["witness"].is_null());
    }

    #[test]
    fn info_reports_witness_and_errors() {
        let v = diagram_info(r#"{"dimension": 2, "generators": [[1,2],[2,1]]}"#).unwrap();
        assert_eq!(v["standardizable"], true);
        assert!(diagram_info("{").is_err());
        assert!(diagram_info(r#"{"dimension": 2, "generators": [[0,1]]}"#).is_err());
    }

    #[test]
    fn standardizes_the_12x5_tableau() {
        let v = standardize_tableau(fixtures::SEMI_STANDARD_12X5).unwrap();
        let expect = Tableau::parse(fixtures::STANDARD_12X5).unwrap();
        assert_eq!(v["rows"], json!(expect.rows()));
        assert_eq!(v["input_standard"], false);
        assert!(standardize_tableau("1 2\n3\n").unwrap_err().contains("line 2"));
    }

    #[test]
    fn fiber_basis_of_the_square() {
        let v = fiber_basis(r#"{"dimension": 2, "generators": [[2,2]]}"#, 1).unwrap();
        assert_eq!(v["reduced"], json!(["T[(1,1);1]*T[(2,2);1] - T[(1,2);1]*T[(2,1);1]"]));
        assert_eq!(v["is_groebner"], true);
        assert_eq!(v["verification"]["complete_at_degree"], true);
    }

    #[test]
    fn fiber_basis_limits_size() {
        assert!(fiber_basis(SMALLEST_3D, 4).is_err());
        let v = fiber_basis(SMALLEST_3D, 2).unwrap();
        assert_eq!(v["is_groebner"], true);
    }
}
