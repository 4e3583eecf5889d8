use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: &str) -> (i32, Value, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cliff-bundle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), value, stdout)
}

fn quadratic(diag: &[&str]) -> Value {
    let n = diag.len();
    json!({ "diag": diag, "polar_upper": vec![vec!["0"; n]; n] })
}

#[test]
fn pfaffian_of_generic_four_by_four() {
    // a12 a34 − a13 a24 + a14 a23 with a = (2, 3, 5, 7, 11, 13)
    let payload = json!({ "bilinear": { "dim": 4, "field": "Q", "entries": [
        ["0", "2", "3", "5"], ["-2", "0", "7", "11"], ["-3", "-7", "0", "13"], ["-5", "-11", "-13", "0"]
    ]}});
    let (code, v, _) = run(&["pfaffian"], &payload.to_string());
    assert_eq!(code, 0);
    assert_eq!(v["pfaffian"], "28");
    assert_eq!(v["schema"], "cliff-bundle/1");
}

#[test]
fn deform_by_zero_is_identity() {
    let element = json!({ "terms": [{ "blade": [1, 2], "coeff": "3/2" }, { "blade": [], "coeff": "-1" }] });
    let payload = json!({
        "quadratic": quadratic(&["1", "2"]),
        "bilinear": { "dim": 2, "field": "Q", "entries": [["0", "0"], ["0", "0"]] },
        "element": element,
    });
    let (code, v, _) = run(&["deform"], &payload.to_string());
    assert_eq!(code, 0);
    let mut got = v["result"]["terms"].as_array().unwrap().clone();
    let mut want = element["terms"].as_array().unwrap().clone();
    let key = |t: &Value| t["blade"].to_string();
    got.sort_by_key(key);
    want.sort_by_key(key);
    assert_eq!(got, want);
}

#[test]
fn check_suite_reports_counts() {
    let (code, v, _) = run(&["check", "bl.group-law", "--seed", "42", "--samples", "50"], "");
    assert_eq!(code, 0);
    assert_eq!(v["passed"], 50);
    assert_eq!(v["failed"], 0);
}

#[test]
fn output_is_deterministic() {
    let payload = json!({
        "quadratic": quadratic(&["1", "-1", "2"]),
        "bilinear": { "dim": 3, "field": "Q", "entries": [["1", "2", "0"], ["0", "1", "-1"], ["3", "0", "1"]] },
        "left": { "terms": [{ "blade": [1], "coeff": "1" }, { "blade": [2, 3], "coeff": "2" }] },
        "right": { "terms": [{ "blade": [1, 3], "coeff": "1/2" }] },
    })
    .to_string();
    let a = run(&["twist"], &payload);
    let b = run(&["twist"], &payload);
    assert_eq!(a.0, 0);
    assert_eq!(a.2, b.2);
    let c = run(&["check", "rho.equivalence", "--seed", "9", "--samples", "5"], "");
    let d = run(&["check", "rho.equivalence", "--seed", "9", "--samples", "5"], "");
    assert_eq!(c.2, d.2);
}

#[test]
fn results_reparse_as_inputs() {
    let q = quadratic(&["1", "1"]);
    let e1e2 = json!({ "terms": [{ "blade": [1, 2], "coeff": "1" }] });
    let (code, sym, _) = run(&["symbol"], &json!({ "quadratic": q, "element": e1e2 }).to_string());
    assert_eq!(code, 0);
    let back = json!({ "quadratic": q, "element": sym["result"] });
    let (code, quant, _) = run(&["quantize"], &back.to_string());
    assert_eq!(code, 0);
    assert_eq!(quant["result"], e1e2);
    let prod = json!({ "quadratic": q, "left": quant["result"], "right": quant["result"] });
    let (code, sq, _) = run(&["product"], &prod.to_string());
    assert_eq!(code, 0);
    // (e1 e2)² = −Q(e1)Q(e2)
    assert_eq!(sq["result"], json!({ "terms": [{ "blade": [], "coeff": "-1" }] }));
}

#[test]
fn rho_of_generator_in_dimension_one() {
    let payload = json!({
        "bilinear": { "dim": 1, "field": "Q", "entries": [["1"]] },
        "element": { "terms": [{ "blade": [1], "coeff": "1" }] },
    });
    let (code, v, _) = run(&["rho"], &payload.to_string());
    assert_eq!(code, 0);
    assert_eq!(v["matrix"], json!([["0", "1"], ["1", "0"]]));
    assert_eq!(v["basis"], json!([[], [1]]));
}

#[test]
fn exp_contract_accepts_either_two_form_encoding() {
    let q = quadratic(&["1", "1", "1"]);
    let w = json!({ "terms": [{ "blade": [1, 2, 3], "coeff": "1" }] });
    let terms = json!({ "terms": [{ "blade": [1, 2], "coeff": "2" }] });
    let (c1, a, _) = run(&["exp-contract"], &json!({ "quadratic": q, "dual_two_form": terms, "element": w }).to_string());
    // A(e1, e2) = −2 for A* = 2 e1* ∧ e2*
    let alt = json!({ "dim": 3, "field": "Q", "entries": [["0", "-2", "0"], ["2", "0", "0"], ["0", "0", "0"]] });
    let (c2, b, _) = run(&["exp-contract"], &json!({ "quadratic": q, "alternating": alt, "element": w }).to_string());
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn domain_errors_exit_one() {
    let payload = json!({
        "quadratic": { "diag": ["1"], "polar_upper": [["0"]] },
        "element": { "terms": [{ "blade": [1], "coeff": "1" }] },
    });
    let (code, v, _) = run(&["symbol", "--field", "Fp:2"], &payload.to_string());
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "characteristic");
    assert_eq!(v["schema"], "cliff-bundle/1");

    let exp = json!({
        "quadratic": { "diag": ["1", "1"], "polar_upper": [["0", "0"], ["0", "0"]] },
        "dual_two_form": { "terms": [{ "blade": [1, 2], "coeff": "1" }] },
        "element": { "terms": [{ "blade": [], "coeff": "1" }] },
    });
    let (code, _, _) = run(&["exp-contract", "--field", "Fp:7"], &exp.to_string());
    assert_eq!(code, 1);

    let (code, _, _) = run(&["check", "exp.gauge", "--field", "Fp:7", "--samples", "1"], "");
    assert_eq!(code, 1);
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(run(&["pfaffian"], "{not json").0, 2);
    assert_eq!(run(&["pfaffian"], r#"{"bilinear": {"dim": 2, "field": "Q", "entries": [["0", "x"], ["0", "0"]]}}"#).0, 2);
    assert_eq!(run(&["pfaffian"], r#"{"bilinear": {"dim": 2, "field": "Q", "entries": [["0"]]}}"#).0, 2);
    assert_eq!(run(&["pfaffian"], r#"{"bilinear": {"dim": 2, "field": "Q", "entries": [["0", "1"], ["-1", "0"]]}, "extra": 1}"#).0, 2);
    let out_of_range = json!({
        "quadratic": { "diag": ["1"], "polar_upper": [["0"]] },
        "left": { "terms": [{ "blade": [2], "coeff": "1" }] },
        "right": { "terms": [] },
    });
    assert_eq!(run(&["product"], &out_of_range.to_string()).0, 2);
    assert_eq!(run(&["check", "no.such-suite"], "").0, 2);
    assert_eq!(run(&["frobnicate"], "").0, 2);
}

#[test]
fn check_without_id_lists_suites() {
    let (code, v, _) = run(&["check"], "");
    assert_eq!(code, 0);
    let ids: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"bl.group-law"));
    assert!(ids.contains(&"rho.equivalence"));
}
