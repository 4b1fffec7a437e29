use std::process::{Command, Output};

use serde_json::Value;

fn adelic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adelic")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schema.json")).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::options().with_draft(jsonschema::Draft::Draft202012).compile(&value).expect("schema compiles")
}

/// Runs with `--json`, validates the envelope and returns it.
fn envelope(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = adelic(&all);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    let compiled = schema();
    if let Err(errors) = compiled.validate(&v) {
        let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
        panic!("{args:?} violates the schema: {msgs:?}");
    }
    (v, out.status.code().unwrap())
}

#[test]
fn zeta_curve_three_routes() {
    let out = adelic(&["zeta", "curve", "--q", "2", "--model", "p1", "--terms", "6", "--method", "all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for route in ["euler", "dirichlet", "hecke"] {
        assert!(text.contains(&format!("{route:<9} 1,3,7,15,31,63")), "{text}");
    }
    let (v, code) = envelope(&["zeta", "curve", "--q", "2", "--terms", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["agree"], true);
    assert_eq!(v["payload"]["routes"]["hecke"]["coeffs"], serde_json::json!(["1", "3", "7", "15", "31", "63"]));
}

#[test]
fn elliptic_curve_fit() {
    let (v, _) = envelope(&["zeta", "curve", "--q", "2", "--model", "plane", "--form", "y^2*z + y*z^2 + x^3", "--terms", "8"]);
    assert_eq!(v["payload"]["genus"], 1);
    assert_eq!(v["payload"]["functional_equation"], true);
    assert!(v["payload"]["routes"].get("hecke").is_none());
}

#[test]
fn rr_verify_example() {
    let out = adelic(&["rr", "verify", "--q", "2", "--divisor", "2*(inf)"]);
    assert!(stdout(&out).contains("3 - 0 = 2 + 1: true"));
    let (v, _) = envelope(&["rr", "verify", "--q", "2", "--divisor", "2*(inf)"]);
    assert_eq!(v["payload"]["l_d"], 3);
    assert_eq!(v["payload"]["l_k_minus_d"], 0);
}

#[test]
fn lattice_enumerate_has_eighteen_and_dot() {
    let (v, _) = envelope(&["lattice", "enumerate"]);
    assert_eq!(v["payload"]["count"], 18);
    assert!(v["payload"]["dot"].as_str().unwrap().starts_with("digraph"));
}

#[test]
fn every_subcommand_is_schema_valid() {
    let runs: &[&[&str]] = &[
        &["zeta", "surface", "--q", "3", "--terms", "5"],
        &["hecke", "fe", "--q", "4"],
        &["fourier", "demo", "--q", "3", "--divisor", "(t) - 1*(inf)", "--seed", "7"],
        &["residue", "point", "--q", "3", "--form", "1/(u*t*(u+t)) * du^dt"],
        &["residue", "curve", "--q", "2", "--form", "1/(t*(u^2+u+1)) * du^dt", "--curve", "t=0"],
        &["lattice", "model"],
        &["measure", "torsor", "--q", "2", "--ideal", "-1", "--twist", "2", "--shift", "3,-1"],
        &["cohomology", "restricted", "--q", "3", "--divisor", "-2*(t+1) - 1*(t^2+1)"],
    ];
    for args in runs {
        let (v, code) = envelope(args);
        assert_eq!(code, 0, "{args:?}: {v}");
        assert_eq!(v["status"], "ok");
    }
}

#[test]
fn checks_report_their_outcome() {
    let (v, _) = envelope(&["hecke", "fe", "--q", "5"]);
    assert_eq!(v["payload"]["holds"], true);
    let (v, _) = envelope(&["cohomology", "restricted", "--q", "2", "--divisor", "3*(inf)"]);
    assert_eq!(v["payload"]["h0"], 4);
    assert_eq!(v["payload"]["matches"], true);
    let (v, _) = envelope(&["measure", "torsor", "--shift", "2,-3"]);
    assert_eq!(v["payload"]["difference"], serde_json::json!([2, -3]));
    let (v, _) = envelope(&["lattice", "model"]);
    assert_eq!(v["payload"]["homomorphism"], true);
}

#[test]
fn exit_codes() {
    let (v, code) = envelope(&["rr", "verify", "--divisor", "3*(t"]);
    assert_eq!((code, v["status"].as_str()), (2, Some("contract-violation")));
    assert!(v["error"].as_str().unwrap().contains("byte"));
    let (_, code) = envelope(&["zeta", "curve", "--q", "6"]);
    assert_eq!(code, 2);
    let (v, code) = envelope(&["hecke", "fe", "--q", "3", "--terms", "2"]);
    assert_eq!((code, v["status"].as_str()), (3, Some("instability")));
    let (_, code) = envelope(&["fourier", "demo", "--q", "3", "--divisor", "4*(t) + 4*(inf)"]);
    assert_eq!(code, 2);
    let out = adelic(&["nonsense"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn output_is_deterministic() {
    let a = adelic(&["fourier", "demo", "--q", "2", "--divisor", "(t)", "--seed", "11", "--pairs", "3"]);
    let b = adelic(&["fourier", "demo", "--q", "2", "--divisor", "(t)", "--seed", "11", "--pairs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}
