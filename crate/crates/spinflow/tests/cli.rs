//! End-to-end tests of the command-line interface.

use std::process::Command;

fn spinflow(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_spinflow"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn catalog_lists_all_entries() {
    let out = spinflow(&["catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for name in ["nil3", "sol3", "s1xs2", "su2", "t3"] {
        assert!(text.contains(name), "missing {name}");
    }
}

#[test]
fn verify_catalog_entries_exit_zero() {
    for name in ["nil3", "sol3", "s1xs2", "su2", "t3"] {
        let out = spinflow(&["verify", "--manifold", name]);
        assert_eq!(out.status.code(), Some(0), "{name} failed");
        let text = String::from_utf8_lossy(&out.stdout);
        assert!(text.contains("PASS"));
        assert!(!text.contains("FAIL"));
    }
}

#[test]
fn verify_json_format_is_machine_readable() {
    let out = spinflow(&["verify", "--manifold", "sol3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let report: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(report["name"], "sol3");
    assert!(report["checks"].as_array().unwrap().len() > 5);
    assert!(report["summary"]["failed"].as_u64() == Some(0));
    for check in report["checks"].as_array().unwrap() {
        assert!(check["id"].is_string());
        assert!(check["description"].is_string());
        assert!(check["computed"].is_number());
        assert!(check["expected"].is_number());
        assert!(check["abs_err"].is_number());
        assert!(check["pass"].is_boolean());
    }
}

#[test]
fn verify_accepts_tau_and_tol() {
    let out = spinflow(&[
        "verify",
        "--manifold",
        "nil3",
        "--tau",
        "0.5",
        "--tol",
        "1e-10",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_file_mode_round_trips_catalog() {
    let spec = spinflow::catalog::catalog_spec("nil3", 2.0).unwrap();
    let dir = std::env::temp_dir().join("spinflow-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nil3_tau2.json");
    std::fs::write(&path, serde_json::to_string_pretty(&spec).unwrap()).unwrap();
    let out = spinflow(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    // unknown manifold
    let out = spinflow(&["verify", "--manifold", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    // missing file
    let out = spinflow(&["verify", "--file", "/nonexistent/spec.json"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed JSON
    let dir = std::env::temp_dir().join("spinflow-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{ definitely not json").unwrap();
    let out = spinflow(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("line"),
        "parse errors report a position: {err}"
    );
    // schema violation: missing both structure constants and scal
    let path = dir.join("schema.json");
    std::fs::write(
        &path,
        r#"{"name": "x", "dim": 3, "spinor": {"components": [[1,0],[0,0]], "derivatives": [{}, {}, {}]}}"#,
    )
    .unwrap();
    let out = spinflow(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // semantic violation: Jacobi failure names the worst triple
    let path = dir.join("jacobi.json");
    std::fs::write(
        &path,
        r#"{"name": "x", "dim": 3,
            "structure_constants": [
                {"i": 1, "j": 2, "k": 3, "value": 1.0},
                {"i": 2, "j": 3, "k": 1, "value": 1.0},
                {"i": 1, "j": 3, "k": 1, "value": 1.0}
            ],
            "spinor": {"components": [[1,0],[0,0]], "derivatives": "spin_connection"}}"#,
    )
    .unwrap();
    let out = spinflow(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("Jacobi"));
    // unknown subcommand / missing args
    let out = spinflow(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = spinflow(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rep_prints_gamma_grids() {
    let out = spinflow(&["rep", "--dim", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("gamma_1"));
    assert!(text.contains("gamma_3"));
    assert!(text.contains("["));
    assert!(text.contains("anticommutation defect"));
    // out-of-range dimension is an input error
    let out = spinflow(&["rep", "--dim", "11"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn five_dimensional_heisenberg_spec_passes() {
    // Rank-two Heisenberg frame: both normal planes bracket into the
    // flow direction. The invariant spinor on the first half-spinor
    // space is a squared-Dirac eigenvector with λ² = 1 and the main
    // bound is again an equality: Scal/4 + |T|² = −1 + 2 = 1.
    let spec = r#"{
        "name": "heis5",
        "dim": 5,
        "structure_constants": [
            {"i": 1, "j": 2, "k": 5, "value": 2.0},
            {"i": 3, "j": 4, "k": 5, "value": 2.0}
        ],
        "flow_index": 5,
        "spinor": {
            "components": [[1,0],[0,0],[0,0],[0,0]],
            "derivatives": "spin_connection"
        }
    }"#;
    let dir = std::env::temp_dir().join("spinflow-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("heis5.json");
    std::fs::write(&path, spec).unwrap();
    let out = spinflow(&[
        "verify",
        "--file",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(report["summary"]["failed"].as_u64(), Some(0));
    let ids: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    for id in [
        "geometry.first_bianchi",
        "spinor.d_squared_eigen",
        "emt.modified_connection",
        "bounds.main",
        "flow.q_oneill",
        "flow.scal_q_cross",
        "sasaki.omega_spectrum_m2",
    ] {
        assert!(ids.contains(&id), "missing {id} in {ids:?}");
    }
}

#[test]
fn non_eigenspinor_field_fails_with_error_record() {
    // Mixing the two half-spinor spaces of the rank-two Heisenberg
    // frame breaks the squared-Dirac eigenvector property; the run
    // must report the failure and exit 1 rather than crash.
    let spec = r#"{
        "name": "heis5-mixed",
        "dim": 5,
        "structure_constants": [
            {"i": 1, "j": 2, "k": 5, "value": 2.0},
            {"i": 3, "j": 4, "k": 5, "value": 2.0}
        ],
        "flow_index": 5,
        "spinor": {
            "components": [[1,0],[1,0],[0,0],[0,0]],
            "derivatives": "spin_connection"
        },
        "checks": ["spinor", "bounds"]
    }"#;
    let dir = std::env::temp_dir().join("spinflow-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("heis5_mixed.json");
    std::fs::write(&path, spec).unwrap();
    let out = spinflow(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("not an eigenvector"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = spinflow(&["verify", "--manifold", "su2", "--format", "json"]);
    let b = spinflow(&["verify", "--manifold", "su2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
