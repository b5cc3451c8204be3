//! End-to-end tests of the compiled binary: exit codes, output determinism,
//! the catalog round trip, and file-based inputs.

use std::io::Write;
use std::process::{Command, Output};

use liecoh::liealg::LieAlgebra;

fn liecoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecoh")).args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn temp_json(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().expect("temp file");
    f.write_all(contents.as_bytes()).expect("write temp file");
    f
}

#[test]
fn exit_codes() {
    assert_eq!(liecoh(&["validate", "catalog:sl2"]).status.code(), Some(0));
    assert_eq!(liecoh(&["catalog", "list"]).status.code(), Some(0));
    assert_eq!(liecoh(&["--help"]).status.code(), Some(0));
    assert_eq!(liecoh(&["--version"]).status.code(), Some(0));

    // Unknown subcommands and bad flags are usage errors, not crashes.
    assert_eq!(liecoh(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(liecoh(&["classify"]).status.code(), Some(1));
    assert_eq!(liecoh(&["classify", "catalog:sl2", "--format", "yaml"]).status.code(), Some(1));

    // Missing files and unknown catalog names are invalid input.
    assert_eq!(liecoh(&["classify", "/nonexistent/algebra.json"]).status.code(), Some(1));
    assert_eq!(liecoh(&["classify", "catalog:no_such_algebra"]).status.code(), Some(1));
    assert_eq!(liecoh(&["catalog", "show", "no_such_algebra"]).status.code(), Some(1));

    // Out-of-range degree is invalid input.
    assert_eq!(liecoh(&["cohomology", "-n", "9", "catalog:sl2"]).status.code(), Some(1));

    // A perfect algebra has no codimension-1 ideal to verify against.
    assert_eq!(liecoh(&["verify", "dixmier", "catalog:sl2"]).status.code(), Some(1));

    // Non-nilpotent input to the nilpotent report is invalid.
    assert_eq!(liecoh(&["verify", "nilpotent-h2", "catalog:sl2"]).status.code(), Some(1));
}

#[test]
fn validate_reports_jacobi_violations() {
    // Perturb one structure constant of sl2 so the Jacobi identity fails.
    let mut file: serde_json::Value =
        serde_json::from_str(&liecoh::catalog::get("sl2").unwrap().algebra.to_json()).unwrap();
    file["brackets"][0]["terms"][0]["c"] = serde_json::json!("3");
    let f = temp_json(&file.to_string());
    let path = f.path().to_str().unwrap();

    let out = liecoh(&["validate", path, "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["valid"], serde_json::json!(false));
    assert!(report["violation"]["triple"].is_array());

    // Every other command refuses the broken table up front.
    assert_eq!(liecoh(&["classify", path]).status.code(), Some(1));
    assert_eq!(liecoh(&["invariants", path]).status.code(), Some(1));
}

#[test]
fn catalog_show_round_trips() {
    for name in liecoh::catalog::list() {
        let out = liecoh(&["catalog", "show", name, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let text = stdout_of(&out);

        // Byte-identical with the shipped data file, modulo the trailing newline.
        let disk = std::fs::read_to_string(format!(
            "{}/data/catalog/{name}.json",
            env!("CARGO_MANIFEST_DIR"),
        ))
        .expect("catalog data file");
        assert_eq!(text.trim_end(), disk.trim_end(), "{name}");

        // The emitted file parses back into the same algebra.
        let reparsed = LieAlgebra::from_json(&text).unwrap();
        assert!(reparsed.same_structure(&liecoh::catalog::get(name).unwrap().algebra), "{name}");
        assert!(reparsed.validate().is_ok(), "{name}");
    }
}

#[test]
fn classify_from_file_matches_catalog_pseudo_path() {
    let entry = liecoh::catalog::get("aff1").unwrap();
    let f = temp_json(&entry.algebra.to_json());
    let by_file = liecoh(&["classify", f.path().to_str().unwrap(), "--format", "json"]);
    let by_name = liecoh(&["classify", "catalog:aff1", "--format", "json"]);
    assert_eq!(by_file.status.code(), Some(0));
    assert_eq!(by_file.stdout, by_name.stdout);

    let verdict: serde_json::Value = serde_json::from_str(&stdout_of(&by_file)).unwrap();
    assert_eq!(verdict["case"], serde_json::json!("witness"));
    assert_eq!(verdict["witness"]["h2_dim"], serde_json::json!(1));
}

#[test]
fn json_output_is_deterministic() {
    let invocations: &[&[&str]] = &[
        &["invariants", "catalog:sl2_semidirect_natural", "--format", "json"],
        &["cohomology", "-n", "2", "catalog:heisenberg3", "--format", "json"],
        &["classify", "catalog:solvable3", "--format", "json"],
        &["verify", "dixmier", "catalog:aff1", "--format", "json"],
        &["verify", "whitehead", "catalog:sl2", "--format", "json"],
        &["catalog", "list", "--format", "json"],
    ];
    for args in invocations {
        let first = liecoh(args);
        let second = liecoh(args);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        // Valid JSON with no trailing junk.
        serde_json::from_str::<serde_json::Value>(&stdout_of(&first)).expect("stdout parses");
    }
}

#[test]
fn cohomology_accepts_module_files() {
    // H^2 of aff1 with the witness line (x acting as 1) is one-dimensional;
    // pass that module through the file interface.
    let module = serde_json::json!({
        "action": [[["1"]], [["0"]]],
        "dim": 1,
    });
    let f = temp_json(&module.to_string());
    let out = liecoh(&[
        "cohomology",
        "-n",
        "2",
        "catalog:aff1",
        f.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["dim_h"], serde_json::json!(1));

    // A malformed module (wrong matrix count) is invalid input.
    let bad = serde_json::json!({ "action": [[["1"]]], "dim": 1 });
    let g = temp_json(&bad.to_string());
    let out = liecoh(&["cohomology", "-n", "1", "catalog:aff1", g.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_subcommands_report_success() {
    let checks: &[&[&str]] = &[
        &["verify", "dixmier", "catalog:heisenberg3"],
        &["verify", "dixmier", "catalog:aff1", "--max-degree", "2"],
        &["verify", "hs", "catalog:sl2_semidirect_natural"],
        &["verify", "kunneth", "catalog:sl2", "catalog:abelian2"],
        &["verify", "whitehead", "catalog:so3"],
        &["verify", "whitehead", "catalog:aff1"],
        &["verify", "nilpotent-h2", "catalog:n4"],
    ];
    for args in checks {
        let out = liecoh(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stdout_of(&out));
    }

    // JSON shape of the identity runs: every run holds.
    let out = liecoh(&["verify", "hs", "catalog:sl2_plus_line", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["all_hold"], serde_json::json!(true));

    // Battery mode vs probe mode.
    let out = liecoh(&["verify", "whitehead", "catalog:sl2", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["mode"], serde_json::json!("battery"));
    let out = liecoh(&["verify", "whitehead", "catalog:heisenberg3", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["mode"], serde_json::json!("probe"));
    assert_eq!(report["probe"]["found"], serde_json::json!(true));

    // Degree-0 runs are fine and a zero cap is rejected.
    assert_eq!(liecoh(&["verify", "kunneth", "catalog:aff1", "catalog:abelian1", "--max-degree", "0"]).status.code(), Some(0));
    assert_eq!(liecoh(&["verify", "whitehead", "catalog:sl2", "--max-module-dim", "0"]).status.code(), Some(1));
}

#[test]
fn text_mode_is_the_default_and_differs_from_json() {
    let text = liecoh(&["classify", "catalog:so3"]);
    assert_eq!(text.status.code(), Some(0));
    let line = stdout_of(&text);
    assert!(line.contains("2-trivial"), "{line}");
    assert!(serde_json::from_str::<serde_json::Value>(&line).is_err());

    let json = liecoh(&["classify", "catalog:so3", "--format", "json"]);
    let verdict: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert_eq!(verdict["case"], serde_json::json!("semisimple"));
    assert_eq!(verdict["witness"], serde_json::Value::Null);
}
