use std::path::PathBuf;
use std::process::Command;

use booth_radius::cli::run_args;

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn run(args: &[&str]) -> booth_radius::cli::Outcome {
    run_args(std::iter::once("booth-radius").chain(args.iter().copied()))
}

#[test]
fn golden_radius_json() {
    let out = run(&["radius", "--class", "starlike", "--alpha", "0.5", "--format", "json"]);
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.stdout, golden("radius_starlike.json"));
}

#[test]
fn golden_inscribed_text() {
    let out = run(&["inscribed", "--alpha", "0.5", "--center", "1", "--format", "text"]);
    assert_eq!(out.exit_code, 0);
    assert_eq!(out.stdout, golden("inscribed_center_one.txt"));
}

#[test]
fn golden_janowski_input_error() {
    let out = run(&["radius", "--class", "janowski", "--A", "1.5", "--alpha", "0.5"]);
    assert_eq!(out.exit_code, 2);
    assert!(out.stdout.is_empty());
    assert_eq!(out.stderr, golden("janowski_a_too_large.stderr"));
}

#[test]
fn golden_boundary_csv() {
    let out = run(&["boundary", "--alpha", "0", "--samples", "8", "--format", "csv"]);
    assert_eq!(out.stdout, golden("boundary_unit_circle.csv"));
    let rows: Vec<_> = out.stdout.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0], "0,2,0");
}

#[test]
fn boundary_first_row_and_json_shape() {
    let csv = run(&["boundary", "--alpha", "0.5", "--samples", "8", "--format", "csv"]);
    assert_eq!(csv.stdout.lines().nth(1), Some("0,3,0"));
    let json = run(&["boundary", "--alpha", "0.5", "--samples", "16", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["results"]["points"].as_array().unwrap().len(), 16);
    assert_eq!(run(&["boundary", "--alpha", "0.5", "--samples", "4"]).exit_code, 2);
}

#[test]
fn json_errors_name_the_parameter() {
    let out = run(&["inscribed", "--alpha", "0.5", "--center", "3", "--format", "json"]);
    assert_eq!(out.exit_code, 2);
    let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["status"], "error");
    assert_eq!(doc["error"]["parameter"], "center");
    assert!(doc.get("results").is_none());
}

#[test]
fn verify_status_tracks_gap_against_tolerance() {
    for (tol, code) in [("1e-6", 0), ("1e-16", 1)] {
        let out = run(&["verify", "--class", "starlike", "--alpha", "0.5", "--tolerance", tol, "--format", "json"]);
        assert_eq!(out.exit_code, code, "{}", out.stdout);
        let doc: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let r = &doc["results"]["radius"];
        let gap = r["abs_gap"].as_f64().unwrap();
        assert!(gap > 0.0);
        let closed = r["closed_form"].as_f64().unwrap();
        let oracle = r["oracle"].as_f64().unwrap();
        assert!(r["tolerance"].as_f64().unwrap() > 0.0);
        assert!((closed - oracle).abs() < 1e-6);
        assert_eq!(doc["status"], if code == 0 { "ok" } else { "fail" });
    }
}

#[test]
fn structured_output_is_deterministic() {
    let args = ["verify", "--alpha", "0.3", "--center", "1.1", "--format", "json"];
    let first = run(&args);
    assert_eq!(first.exit_code, 0, "{}", first.stdout);
    assert_eq!(first.stdout, run(&args).stdout);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_booth-radius");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let ok = status(&["radius", "--class", "convex", "--alpha", "0.5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8(ok.stdout).unwrap().starts_with("R = "));

    let fail = status(&["verify", "--class", "starlike", "--alpha", "0.5", "--tolerance", "1e-16"]);
    assert_eq!(fail.status.code(), Some(1));

    let bad = status(&["radius", "--class", "janowski", "--A", "1.5", "--alpha", "0.5"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("A = 1.5"));

    let unparsable = status(&["radius", "--alpha"]);
    assert_eq!(unparsable.status.code(), Some(2));
}
