use serde_json::Value;
use std::process::{Command, Output};

fn nck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = nck(&a);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc: Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    doc["result"].clone()
}

fn terms(v: &Value, field: &str) -> Vec<(String, String)> {
    let mut t: Vec<(String, String)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            (
                t[field].as_str().unwrap().to_string(),
                t["coeff"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    t.sort();
    t
}

fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
    let mut t: Vec<_> = v
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    t.sort();
    t
}

#[test]
fn ribbon_embedding() {
    let v = json(&["nsym", "embed", "--basis", "R", "--I", "2,1"]);
    assert_eq!(v["basis"], "X");
    assert_eq!(
        terms(&v, "forest"),
        pairs(&[("000", "2"), ("100", "1"), ("010", "1")])
    );
}

#[test]
fn eulerian_table() {
    let v = json(&["idem", "eulerian", "--n", "4", "--k", "1"]);
    assert_eq!(
        terms(&v, "forest"),
        pairs(&[
            ("1110", "1/4"),
            ("1200", "1/6"),
            ("2010", "1/12"),
            ("2100", "1/12")
        ])
    );
}

#[test]
fn empty_forest_parses() {
    let out = nck(&["forest", "parse", "--code", ""]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&["forest", "parse", "--code", ""]);
    assert_eq!(v["size"], 0);
}

#[test]
fn ehrhart_of_cherry_poset() {
    let v = json(&["ehrhart", "poly", "--forest", "100"]);
    assert_eq!(v["polynomial"]["text"], "1 + 5/2 * x + 2 * x^2 + 1/2 * x^3");
    let v = json(&[
        "ehrhart",
        "qcount",
        "--forest",
        "100",
        "--n",
        "3",
        "--interior",
    ]);
    assert_eq!(v["value"], "-q^-5 - q^-4");
    assert_eq!(v["abs"], "q^-5 + q^-4");
}

#[test]
fn coproduct_terms() {
    let v = json(&["hopf", "coproduct", "--code", "10"]);
    let mut got: Vec<(String, String)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            (
                t["left"].as_str().unwrap().into(),
                t["right"].as_str().unwrap().into(),
            )
        })
        .collect();
    got.sort();
    assert_eq!(got, pairs(&[("", "10"), ("0", "0"), ("10", "")]));
}

#[test]
fn quasi_idempotent_report() {
    let v = json(&["idem", "verify", "--what", "quasi", "--n", "4"]);
    let rows = v["results"].as_array().unwrap();
    let phi = rows.iter().find(|r| r["element"] == "phi_4").unwrap();
    assert_eq!(phi["ok"], true);
    assert_eq!(phi["scalar"], "1");
    let psi = rows.iter().find(|r| r["element"] == "Psi_4").unwrap();
    assert_eq!(psi["scalar"], "4");
}

#[test]
fn verify_suite_passes() {
    let out = nck(&["verify", "--suite", "words", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(nck(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        nck(&["nsym", "embed", "--basis", "Q", "--I", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(nck(&["verify", "--suite", "nope"]).status.code(), Some(2));
    // domain
    assert_eq!(
        nck(&["forest", "parse", "--code", "210"]).status.code(),
        Some(3)
    );
    assert_eq!(
        nck(&["nsym", "embed", "--basis", "R", "--I", "2,0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        nck(&["idem", "eulerian", "--n", "3", "--k", "4"])
            .status
            .code(),
        Some(3)
    );
    // cost guard
    assert_eq!(nck(&["forest", "list", "--n", "9"]).status.code(), Some(4));
    assert_eq!(
        nck(&["forest", "list", "--n", "9", "--max-n", "9"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        nck(&["verify", "--suite", "hopf", "--n", "40"])
            .status
            .code(),
        Some(4)
    );
    // help
    assert_eq!(nck(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_is_byte_stable() {
    let args = [
        "birkhoff", "d-lambda", "--n", "4", "--lambda", "2,1", "--basis", "R", "--format", "json",
    ];
    let a = nck(&args).stdout;
    let b = nck(&args).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}
