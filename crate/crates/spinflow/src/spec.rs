//! JSON manifold specifications: parsing, validation, and resolution
//! into runnable engine inputs.
//!
//! Schema (1-based indices, structure constants listed for i < j,
//! complex numbers as [re, im] pairs):
//!
//! ```json
//! {
//!   "name": "nil3",
//!   "dim": 3,
//!   "structure_constants": [{"i": 1, "j": 2, "k": 3, "value": 2.0}],
//!   "flow_index": 3,
//!   "spinor": {
//!     "components": [[1.0, 0.0], [0.0, 0.0]],
//!     "derivatives": "spin_connection"
//!   },
//!   "overrides": {"scal": 2.0, "ric": [[0,0,0],[0,1,0],[0,0,1]]},
//!   "checks": ["geometry", "spinor", "emt", "bounds", "flow", "sasaki"]
//! }
//! ```
//!
//! Prescription mode replaces `"derivatives"` with one Clifford element
//! per frame direction, e.g. `{"vector": [0, 0, 0.5]}`; it requires
//! `overrides.scal` since no curvature can be derived.

use serde::{Deserialize, Serialize};

use crate::clifford::{build_rep, CliffordAlgebraRep, CliffordElement, Spinor};
use crate::error::{Result, SpinError};
use crate::foliation::{flow_structure, FlowStructure};
use crate::frame::{
    levi_civita, riemann_curvature, validate_frame, CurvatureData, FrameManifold,
    LeviCivitaConnection, StructureEntry,
};
use crate::linalg::c;
use crate::spinor_field::{make_field, DerivSpec, SpinorField};
use crate::tensor::BilinearTensor;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifoldSpec {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure_constants: Option<Vec<ConstantEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flow_index: Option<usize>,
    pub spinor: SpinorSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub overrides: Option<Overrides>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckGroup>>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ConstantEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpinorSpec {
    /// Complex components as [re, im] pairs.
    pub components: Vec<[f64; 2]>,
    pub derivatives: DerivativesSpec,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DerivativesSpec {
    Keyword(String),
    Prescriptions(Vec<ElementSpec>),
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ElementSpec {
    #[serde(default)]
    pub scalar: f64,
    #[serde(default)]
    pub vector: Vec<f64>,
    #[serde(default)]
    pub bivector: Vec<BivectorTerm>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BivectorTerm {
    pub j: usize,
    pub k: usize,
    pub value: f64,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Overrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scal: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ric: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckGroup {
    Geometry,
    Spinor,
    Emt,
    Bounds,
    Flow,
    Sasaki,
}

pub const ALL_GROUPS: [CheckGroup; 6] = [
    CheckGroup::Geometry,
    CheckGroup::Spinor,
    CheckGroup::Emt,
    CheckGroup::Bounds,
    CheckGroup::Flow,
    CheckGroup::Sasaki,
];

/// Parses and validates a JSON manifold spec.
pub fn load_spec(text: &str) -> Result<ManifoldSpec> {
    let spec: ManifoldSpec = match serde_json::from_str(text) {
        Ok(s) => s,
        Err(e) => {
            return Err(if e.is_syntax() || e.is_eof() {
                SpinError::SpecParse(format!(
                    "invalid JSON at line {}, column {}: {}",
                    e.line(),
                    e.column(),
                    e
                ))
            } else {
                SpinError::SpecSchema(e.to_string())
            });
        }
    };
    validate_spec(&spec)?;
    Ok(spec)
}

fn validate_spec(spec: &ManifoldSpec) -> Result<()> {
    if spec.dim < 1 || spec.dim > 10 {
        return Err(SpinError::SpecSchema(format!(
            "field 'dim': {} outside supported range 1..=10",
            spec.dim
        )));
    }
    let n_spin = 1usize << (spec.dim / 2);
    if spec.spinor.components.len() != n_spin {
        return Err(SpinError::SpecSchema(format!(
            "field 'spinor.components': expected {} complex pairs for dim {}, got {}",
            n_spin,
            spec.dim,
            spec.spinor.components.len()
        )));
    }
    if spec
        .spinor
        .components
        .iter()
        .all(|[re, im]| *re == 0.0 && *im == 0.0)
    {
        return Err(SpinError::SpecSemantic(
            "field 'spinor.components': zero spinor".into(),
        ));
    }
    match &spec.spinor.derivatives {
        DerivativesSpec::Keyword(k) if k == "spin_connection" => {
            if spec.structure_constants.is_none() {
                return Err(SpinError::SpecSchema(
                    "field 'spinor.derivatives': \"spin_connection\" requires structure_constants"
                        .into(),
                ));
            }
        }
        DerivativesSpec::Keyword(k) => {
            return Err(SpinError::SpecSchema(format!(
                "field 'spinor.derivatives': unknown keyword {k:?} (expected \"spin_connection\" or a prescription list)"
            )));
        }
        DerivativesSpec::Prescriptions(list) => {
            if list.len() != spec.dim {
                return Err(SpinError::SpecSchema(format!(
                    "field 'spinor.derivatives': expected {} prescriptions, got {}",
                    spec.dim,
                    list.len()
                )));
            }
        }
    }
    if spec.structure_constants.is_none() {
        let has_scal = spec
            .overrides
            .as_ref()
            .map(|o| o.scal.is_some())
            .unwrap_or(false);
        if !has_scal {
            return Err(SpinError::SpecSchema(
                "either 'structure_constants' or 'overrides.scal' must be present".into(),
            ));
        }
    }
    if let Some(fi) = spec.flow_index {
        if fi < 1 || fi > spec.dim {
            return Err(SpinError::SpecSchema(format!(
                "field 'flow_index': {fi} out of range 1..={}",
                spec.dim
            )));
        }
    }
    if let Some(overrides) = &spec.overrides {
        if let Some(ric) = &overrides.ric {
            if ric.len() != spec.dim || ric.iter().any(|row| row.len() != spec.dim) {
                return Err(SpinError::SpecSchema(format!(
                    "field 'overrides.ric': expected a {0}x{0} matrix",
                    spec.dim
                )));
            }
        }
    }
    Ok(())
}

/// Everything the verification run needs, derived from a spec.
pub struct Resolved {
    pub name: String,
    pub dim: usize,
    pub rep: CliffordAlgebraRep,
    pub geometry: Option<Geometry>,
    pub field: SpinorField,
    pub flow: Option<FlowStructure>,
    pub scal: f64,
    pub ric: Option<BilinearTensor>,
    pub groups: Vec<CheckGroup>,
}

pub struct Geometry {
    pub manifold: FrameManifold,
    pub conn: LeviCivitaConnection,
    pub curv: CurvatureData,
}

pub fn resolve(spec: &ManifoldSpec) -> Result<Resolved> {
    let rep = build_rep(spec.dim)?;

    let geometry = match &spec.structure_constants {
        Some(entries) => {
            let raw: Vec<StructureEntry> = entries
                .iter()
                .map(|e| StructureEntry {
                    i: e.i,
                    j: e.j,
                    k: e.k,
                    value: e.value,
                })
                .collect();
            let manifold = validate_frame(spec.dim, &raw).map_err(|e| match e {
                SpinError::JacobiViolation { .. } => SpinError::SpecSemantic(e.to_string()),
                other => SpinError::SpecSchema(other.to_string()),
            })?;
            let conn = levi_civita(&manifold);
            let curv = riemann_curvature(&manifold, &conn);
            Some(Geometry {
                manifold,
                conn,
                curv,
            })
        }
        None => None,
    };

    let psi0 = Spinor::new(
        spec.spinor
            .components
            .iter()
            .map(|[re, im]| c(*re, *im))
            .collect(),
    );
    let field = match &spec.spinor.derivatives {
        DerivativesSpec::Keyword(_) => {
            let geo = geometry.as_ref().expect("validated");
            make_field(&rep, psi0, DerivSpec::SpinConnection(&geo.conn))?
        }
        DerivativesSpec::Prescriptions(list) => {
            let elements: Vec<CliffordElement> = list
                .iter()
                .map(|e| {
                    let mut vector = e.vector.clone();
                    vector.resize(spec.dim, 0.0);
                    CliffordElement {
                        scalar: e.scalar,
                        vector,
                        bivector: e
                            .bivector
                            .iter()
                            .map(|t| (t.j - 1, t.k - 1, t.value))
                            .collect(),
                    }
                })
                .collect();
            make_field(&rep, psi0, DerivSpec::Elements(&elements))?
        }
    };

    let flow = match (spec.flow_index, &geometry) {
        (Some(fi), Some(geo)) => Some(flow_structure(&geo.manifold, &geo.conn, fi)?),
        _ => None,
    };

    let scal = spec
        .overrides
        .as_ref()
        .and_then(|o| o.scal)
        .or(geometry.as_ref().map(|g| g.curv.scal))
        .expect("validated");
    let ric = spec
        .overrides
        .as_ref()
        .and_then(|o| o.ric.as_ref())
        .map(|rows| BilinearTensor::from_rows(rows))
        .or(geometry.as_ref().map(|g| g.curv.ricci.clone()));

    // Default check groups: everything the input makes applicable.
    let groups = match &spec.checks {
        Some(list) => list.clone(),
        None => ALL_GROUPS
            .into_iter()
            .filter(|g| match g {
                CheckGroup::Geometry => geometry.is_some(),
                CheckGroup::Flow | CheckGroup::Sasaki => {
                    geometry.is_some() && spec.flow_index.is_some()
                }
                _ => true,
            })
            .collect(),
    };

    Ok(Resolved {
        name: spec.name.clone(),
        dim: spec.dim,
        rep,
        geometry,
        field,
        flow,
        scal,
        ric,
        groups,
    })
}
