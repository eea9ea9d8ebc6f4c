use std::path::PathBuf;
use std::process::Command;

use clband::cli::{exit_code, run, EXIT_AMBIGUOUS, EXIT_INVALID, EXIT_OK, EXIT_VIOLATION};
use clband::Error;
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn clband(args: &[&str]) -> clband::cli::Outcome {
    run(std::iter::once("clband").chain(args.iter().cloned()))
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = clband(&all);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn scratch(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("clband-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_clband");
    let status = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(status(&["validate", &fixture("tangent.json")]), EXIT_OK);
    assert_eq!(status(&["validate", "/no/such/file.json"]), EXIT_INVALID);
    assert_eq!(
        status(&["chambers", &fixture("annulus-counterexample.json")]),
        EXIT_VIOLATION
    );
    assert_eq!(
        status(&[
            "table",
            "--product",
            "associative",
            &fixture("triangle-circle.json")
        ]),
        EXIT_VIOLATION
    );
}

#[test]
fn validation_errors() {
    let dup = scratch(
        "dup.json",
        r#"{"curves":[{"type":"line","coeffs":[0,1,0]},{"type":"line","coeffs":[0,2,0]}]}"#,
    );
    assert_eq!(clband(&["validate", &dup]).code, EXIT_INVALID);
    let empty = scratch(
        "empty.json",
        r#"{"curves":[{"type":"conic","coeffs":[1,0,1,0,0,1]}]}"#,
    );
    assert_eq!(clband(&["validate", &empty]).code, EXIT_INVALID);
    assert_eq!(
        clband(&["--refinement-depth", "0", "faces", &fixture("tangent.json")]).code,
        EXIT_INVALID
    );
    let hyp = scratch(
        "hyp.json",
        r#"{"curves":[{"type":"conic","coeffs":[0,1,0,0,0,-1]},{"type":"line","coeffs":[1,-1,0]}]}"#,
    );
    assert_eq!(
        clband(&["restrict", &hyp, "--component", "H1"]).code,
        EXIT_INVALID
    );
    assert_eq!(
        clband(&["restrict", &hyp, "--component", "H2"]).code,
        EXIT_OK
    );
    assert_eq!(
        clband(&["restrict", &fixture("tangent.json"), "--component", "Q"]).code,
        EXIT_INVALID
    );
    assert_eq!(exit_code(&Error::AmbiguousTie(0, 1)), EXIT_AMBIGUOUS);
}

#[test]
fn json_output_is_deterministic_and_records_the_seed() {
    let args = [
        "--format",
        "json",
        "--seed",
        "17",
        "check",
        &fixture("non-associative.json"),
    ];
    let a = clband(&args);
    let b = clband(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["seed"], 17);
    assert_eq!(v["command"], "check");
}

#[test]
fn faces_round_trip() {
    let first = json(&["faces", &fixture("oval-restriction.json")]);
    let path = scratch("faces.json", &first.to_string());
    let second = json(&["faces", &path]);
    assert_eq!(first["faces"], second["faces"]);
    assert_eq!(first["order"], second["order"]);
}

#[test]
fn signs_examples() {
    let t = json(&["signs", &fixture("tangent.json")]);
    let text = t.to_string();
    assert!(text.contains("\"Closed\""), "{text}");
    let out = clband(&["signs", &fixture("tangent.json")]);
    assert!(
        out.stdout.contains("faces: 7") && out.stdout.contains("sign vectors: 6"),
        "{}",
        out.stdout
    );
    let tri = clband(&["signs", &fixture("triangle-circle.json")]);
    assert!(tri.stdout.contains("0+-0"), "{}", tri.stdout);
}

#[test]
fn chambers_on_line_and_circle() {
    let out = clband(&["chambers", &fixture("line-circle.json")]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.stdout.matches("4 = 2 + 2 holds").count(),
        2,
        "{}",
        out.stdout
    );
    let v = json(&["chambers", &fixture("line-circle.json")]);
    assert_eq!(v["rows"][0]["classes"], 2);
}

#[test]
fn render_outputs() {
    let svg = clband(&["render", &fixture("tangent.json")]);
    assert!(svg.stdout.starts_with("<svg"));
    let dot = clband(&["--format", "dot", "render", &fixture("tangent.json")]);
    assert!(dot.stdout.starts_with("digraph"));
}

#[test]
fn check_battery_passes_on_fixtures() {
    for name in [
        "tangent.json",
        "line-circle.json",
        "lines.json",
        "non-associative.json",
        "tangent-line-restriction.json",
        "oval-restriction.json",
    ] {
        let out = clband(&["check", &fixture(name)]);
        assert_eq!(out.code, EXIT_OK, "{name}: {}", out.stdout);
    }
}
