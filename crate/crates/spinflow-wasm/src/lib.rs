//! Browser bindings for the verification engine. Every function
//! returns JSON so the page stays a thin renderer.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use spinflow::catalog::{catalog, catalog_spec};
use spinflow::clifford::build_rep;
use spinflow::verify::run_verification;

#[derive(Serialize)]
struct CatalogEntryOut {
    name: String,
    description: String,
}

#[wasm_bindgen]
pub fn catalog_json() -> String {
    let entries: Vec<CatalogEntryOut> = catalog()
        .into_iter()
        .map(|e| CatalogEntryOut {
            name: e.name.to_string(),
            description: e.description.to_string(),
        })
        .collect();
    serde_json::to_string(&entries).unwrap_or_else(|_| "[]".into())
}

fn error_json(message: String) -> String {
    serde_json::to_string(&serde_json::json!({ "error": message }))
        .unwrap_or_else(|_| "{\"error\":\"internal\"}".into())
}

/// Runs the full applicable check suite on a catalog manifold and
/// returns the verification report.
#[wasm_bindgen]
pub fn verify_manifold(name: &str, tau: f64, tol: f64) -> String {
    let spec = match catalog_spec(name, tau) {
        Ok(s) => s,
        Err(e) => return error_json(e.to_string()),
    };
    match run_verification(&spec, tol) {
        Ok(report) => serde_json::to_string(&report).unwrap_or_else(|e| error_json(e.to_string())),
        Err(e) => error_json(e.to_string()),
    }
}

/// Runs the suite on a user-supplied JSON spec.
#[wasm_bindgen]
pub fn verify_spec(text: &str, tol: f64) -> String {
    let spec = match spinflow::spec::load_spec(text) {
        Ok(s) => s,
        Err(e) => return error_json(e.to_string()),
    };
    match run_verification(&spec, tol) {
        Ok(report) => serde_json::to_string(&report).unwrap_or_else(|e| error_json(e.to_string())),
        Err(e) => error_json(e.to_string()),
    }
}

#[derive(Serialize)]
struct GammaOut {
    dim: usize,
    spinor_dim: usize,
    anticommutation_defect: f64,
    /// matrices[i][row][col] = [re, im]
    matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

/// Gamma matrices of the representation in dimension `dim` as
/// [re, im] grids.
#[wasm_bindgen]
pub fn gamma_matrices(dim: usize) -> String {
    let rep = match build_rep(dim) {
        Ok(r) => r,
        Err(e) => return error_json(e.to_string()),
    };
    let matrices = rep
        .gamma
        .iter()
        .map(|g| {
            (0..rep.n_spin)
                .map(|row| {
                    (0..rep.n_spin)
                        .map(|col| {
                            let z = g.get(row, col);
                            [z.re, z.im]
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let out = GammaOut {
        dim,
        spinor_dim: rep.n_spin,
        anticommutation_defect: rep.anticommutation_defect(),
        matrices,
    };
    serde_json::to_string(&out).unwrap_or_else(|e| error_json(e.to_string()))
}

#[derive(Serialize)]
struct BoundCurveOut {
    tau: Vec<f64>,
    lambda_sq: Vec<f64>,
    main_rhs: Vec<f64>,
    emt_rhs: Vec<f64>,
    friedrich_rhs: Vec<f64>,
    scal: Vec<f64>,
}

/// Eigenvalue and bound values for the Heisenberg family as τ sweeps,
/// for plotting the limiting-case coincidence of λ² with the estimate.
#[wasm_bindgen]
pub fn nil3_bound_curve(tau_min: f64, tau_max: f64, steps: usize) -> String {
    let steps = steps.clamp(2, 2048);
    let mut out = BoundCurveOut {
        tau: Vec::with_capacity(steps),
        lambda_sq: Vec::with_capacity(steps),
        main_rhs: Vec::with_capacity(steps),
        emt_rhs: Vec::with_capacity(steps),
        friedrich_rhs: Vec::with_capacity(steps),
        scal: Vec::with_capacity(steps),
    };
    for s in 0..steps {
        let tau = tau_min + (tau_max - tau_min) * (s as f64) / ((steps - 1) as f64);
        if tau.abs() < 1e-6 {
            continue;
        }
        let spec = match catalog_spec("nil3", tau) {
            Ok(sp) => sp,
            Err(e) => return error_json(e.to_string()),
        };
        let resolved = match spinflow::spec::resolve(&spec) {
            Ok(r) => r,
            Err(e) => return error_json(e.to_string()),
        };
        let bounds = match spinflow::emt::check_bounds(
            &resolved.field,
            resolved.scal,
            resolved.flow.as_ref(),
            1e-9,
        ) {
            Ok(b) => b,
            Err(e) => return error_json(e.to_string()),
        };
        out.tau.push(tau);
        out.lambda_sq.push(bounds.lambda_sq);
        out.main_rhs.push(bounds.main_rhs);
        out.emt_rhs.push(bounds.emt_rhs);
        out.friedrich_rhs.push(bounds.friedrich_rhs);
        out.scal.push(resolved.scal);
    }
    serde_json::to_string(&out).unwrap_or_else(|e| error_json(e.to_string()))
}
