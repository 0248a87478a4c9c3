//! Built-in manifold catalog covering the worked examples: the
//! Heisenberg group, the solvable group, the round product of circle
//! and sphere, the round three-sphere, and the flat torus.

use crate::error::{Result, SpinError};
use crate::spec::{
    CheckGroup, ConstantEntry, DerivativesSpec, ElementSpec, ManifoldSpec, Overrides, SpinorSpec,
};

pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "nil3",
            description: "Heisenberg group with left-invariant metric, [e1,e2] = 2τ·e3 (τ from --tau)",
        },
        CatalogEntry {
            name: "sol3",
            description: "solvable group, [e1,e3] = e1, [e2,e3] = -e2; minimal non-Riemannian flow",
        },
        CatalogEntry {
            name: "s1xs2",
            description: "product of unit circle and round 2-sphere, prescription mode with Killing spinor data",
        },
        CatalogEntry {
            name: "su2",
            description: "round 3-sphere as SU(2) with [ei,ej] = 2ε_ijk·ek; Killing spinors",
        },
        CatalogEntry {
            name: "t3",
            description: "flat 3-torus (abelian frame); parallel spinors",
        },
    ]
}

fn default_spinor() -> SpinorSpec {
    SpinorSpec {
        components: vec![[1.0, 0.0], [0.0, 0.0]],
        derivatives: DerivativesSpec::Keyword("spin_connection".into()),
    }
}

const ALL: &[CheckGroup] = &[
    CheckGroup::Geometry,
    CheckGroup::Spinor,
    CheckGroup::Emt,
    CheckGroup::Bounds,
    CheckGroup::Flow,
    CheckGroup::Sasaki,
];

/// Instantiates a catalog spec; `tau` only affects the nil3 template.
pub fn catalog_spec(name: &str, tau: f64) -> Result<ManifoldSpec> {
    match name {
        "nil3" => Ok(ManifoldSpec {
            name: "nil3".into(),
            dim: 3,
            structure_constants: Some(vec![ConstantEntry {
                i: 1,
                j: 2,
                k: 3,
                value: 2.0 * tau,
            }]),
            flow_index: Some(3),
            spinor: default_spinor(),
            overrides: None,
            checks: Some(ALL.to_vec()),
        }),
        "sol3" => Ok(ManifoldSpec {
            name: "sol3".into(),
            dim: 3,
            structure_constants: Some(vec![
                ConstantEntry {
                    i: 1,
                    j: 3,
                    k: 1,
                    value: 1.0,
                },
                ConstantEntry {
                    i: 2,
                    j: 3,
                    k: 2,
                    value: -1.0,
                },
            ]),
            flow_index: Some(3),
            spinor: default_spinor(),
            overrides: None,
            checks: Some(ALL.to_vec()),
        }),
        "su2" => Ok(ManifoldSpec {
            name: "su2".into(),
            dim: 3,
            structure_constants: Some(vec![
                ConstantEntry {
                    i: 1,
                    j: 2,
                    k: 3,
                    value: 2.0,
                },
                ConstantEntry {
                    i: 2,
                    j: 3,
                    k: 1,
                    value: 2.0,
                },
                ConstantEntry {
                    i: 3,
                    j: 1,
                    k: 2,
                    value: 2.0,
                },
            ]),
            flow_index: Some(3),
            spinor: default_spinor(),
            overrides: None,
            checks: Some(ALL.to_vec()),
        }),
        "t3" => Ok(ManifoldSpec {
            name: "t3".into(),
            dim: 3,
            structure_constants: Some(Vec::new()),
            flow_index: Some(3),
            spinor: default_spinor(),
            overrides: None,
            checks: Some(ALL.to_vec()),
        }),
        "s1xs2" => Ok(ManifoldSpec {
            name: "s1xs2".into(),
            dim: 3,
            structure_constants: None,
            flow_index: Some(1),
            spinor: SpinorSpec {
                components: vec![[1.0, 0.0], [0.0, 0.0]],
                derivatives: DerivativesSpec::Prescriptions(vec![
                    ElementSpec::default(),
                    ElementSpec {
                        vector: vec![0.0, 0.0, 0.5],
                        ..Default::default()
                    },
                    ElementSpec {
                        vector: vec![0.0, -0.5, 0.0],
                        ..Default::default()
                    },
                ]),
            },
            overrides: Some(Overrides {
                scal: Some(2.0),
                ric: Some(vec![
                    vec![0.0, 0.0, 0.0],
                    vec![0.0, 1.0, 0.0],
                    vec![0.0, 0.0, 1.0],
                ]),
            }),
            checks: Some(vec![
                CheckGroup::Spinor,
                CheckGroup::Emt,
                CheckGroup::Bounds,
            ]),
        }),
        other => Err(SpinError::UnknownManifold(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::{load_spec, resolve};

    #[test]
    fn every_entry_resolves() {
        for entry in catalog() {
            let spec = catalog_spec(entry.name, 1.0).unwrap();
            let resolved = resolve(&spec).unwrap();
            assert_eq!(resolved.name, entry.name);
        }
    }

    #[test]
    fn catalog_specs_survive_json_round_trip() {
        for entry in catalog() {
            let spec = catalog_spec(entry.name, 2.0).unwrap();
            let text = serde_json::to_string_pretty(&spec).unwrap();
            let back = load_spec(&text).unwrap();
            assert_eq!(back.name, spec.name);
            assert!(resolve(&back).is_ok());
        }
    }

    #[test]
    fn unknown_name_is_an_error() {
        assert!(matches!(
            catalog_spec("nope", 1.0),
            Err(SpinError::UnknownManifold(_))
        ));
    }
}
