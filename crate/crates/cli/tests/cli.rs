use std::collections::BTreeMap;

use proptest::prelude::*;
use radica_cli::{parse_polynomial, run, EXIT_BACKEND, EXIT_DEGREE, EXIT_OK, EXIT_PARSE};
use radica_core::BigRational;
use serde_json::Value;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("radica").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json_close(a: &Value, b: &Value, tol: f64) -> bool {
    match (a, b) {
        (Value::Number(x), Value::Number(y)) => {
            let (x, y) = (x.as_f64().unwrap(), y.as_f64().unwrap());
            (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
        }
        (Value::Array(x), Value::Array(y)) => {
            x.len() == y.len() && x.iter().zip(y).all(|(p, q)| json_close(p, q, tol))
        }
        (Value::Object(x), Value::Object(y)) => {
            x.len() == y.len()
                && x.iter()
                    .all(|(k, v)| y.get(k).is_some_and(|w| json_close(v, w, tol)))
        }
        _ => a == b,
    }
}

#[test]
fn cardano_text_prints_exact_root_and_pair() {
    let (code, out, _) = run_cli(&["solve", "x^3 - 6*x - 9", "--verify"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("x = 3  [cardano-A]"), "{out}");
    assert_eq!(out.matches("x ~ -1.5").count(), 2, "{out}");
    assert!(out.contains("verification: pass"));
}

#[test]
fn cardano_json_matches_golden() {
    let (code, out, _) = run_cli(&["solve", "x^3 - 6*x - 9", "--verify", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let got: Value = serde_json::from_str(&out).unwrap();
    let golden: Value =
        serde_json::from_str(include_str!("golden/cardano.json")).unwrap();
    assert!(json_close(&got, &golden, 1e-12), "{out}");
}

#[test]
fn degree_cap_and_zero_polynomial() {
    assert_eq!(run_cli(&["solve", "x^5 + 1"]).0, EXIT_DEGREE);
    assert_eq!(run_cli(&["solve", "7"]).0, EXIT_DEGREE);
    assert_eq!(run_cli(&["solve", "x - x"]).0, EXIT_DEGREE);
}

#[test]
fn usage_and_parse_errors() {
    let (code, _, err) = run_cli(&["solve", "x^2 + x + + 1"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("offset 10"), "{err}");
    assert_eq!(run_cli(&["solve", "x^2", "--field", "real"]).0, EXIT_PARSE);
    assert_eq!(run_cli(&["frobnicate"]).0, EXIT_PARSE);
    assert_eq!(run_cli(&["--help"]).0, EXIT_OK);
}

#[test]
fn x2_plus_1_json_has_plus_minus_i() {
    let (code, out, _) = run_cli(&["solve", "x^2 + 1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["verification"], Value::Null);
    let roots = v["roots"].as_array().unwrap();
    let ims: Vec<f64> = roots.iter().map(|r| r["approx"]["im"].as_f64().unwrap()).collect();
    let res: Vec<f64> = roots.iter().map(|r| r["approx"]["re"].as_f64().unwrap()).collect();
    assert_eq!(ims, vec![-1.0, 1.0]);
    assert_eq!(res, vec![0.0, 0.0]);
}

#[test]
fn leading_negative_poly_is_not_a_flag() {
    let (code, out, _) = run_cli(&["solve", "-x^2 + 4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("x = -2") && out.contains("x = 2"), "{out}");
}

#[test]
fn complex_field_and_decimals() {
    let (code, out, _) = run_cli(&["solve", "x^2 - 2", "--field", "complex", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["field"], "complex");
    let (code, out, err) = run_cli(&["solve", "0.5x^2 - 2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("field: complex"));
    assert!(err.contains("decimal"));
}

#[test]
fn strict_mode_rejects_degenerate_inputs() {
    for poly in ["x^3 - 8", "x^3 - x", "x^4 - 5x^2 + 4", "x^4 + 2x^2 + x - 1/3"] {
        assert_eq!(run_cli(&["solve", poly, "--verify"]).0, EXIT_OK, "{poly}");
        let (code, _, err) = run_cli(&["solve", poly, "--paper-strict"]);
        assert_eq!(code, EXIT_BACKEND, "{poly}");
        assert!(err.contains("error:"), "{err}");
    }
    assert_eq!(run_cli(&["solve", "x^3 - 6x - 9", "--paper-strict", "--verify"]).0, EXIT_OK);
}

#[test]
fn selftest_with_fixed_seed() {
    let mut out = Vec::new();
    let code = radica_cli::selftest::run_selftest(11, &mut out);
    let out = String::from_utf8(out).unwrap();
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("FAIL"));
}

fn term_strategy() -> impl Strategy<Value = (i64, i64, u32)> {
    (-30i64..=30, 1i64..=9, 0u32..=6)
}

proptest! {
    #[test]
    fn rendered_polynomials_parse_back(terms in prop::collection::vec(term_strategy(), 1..6)) {
        let mut text = String::new();
        let mut expected: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (i, (n, d, e)) in terms.iter().enumerate() {
            let sign = if *n < 0 { "-" } else if i == 0 { "" } else { "+" };
            text.push_str(&format!(" {sign} {}/{d}*x^{e}", n.abs()));
            let q = BigRational::from_i64s(*n, *d).unwrap();
            let slot = expected.entry(*e).or_insert_with(BigRational::zero);
            *slot = &*slot + &q;
        }
        expected.retain(|_, c| !c.is_zero());
        let p = parse_polynomial(&text).unwrap();
        prop_assert_eq!(p.coefficients, expected);
    }

    #[test]
    fn whitespace_is_insignificant(a in -9i64..=9, b in -9i64..=9) {
        let dense = format!("x^2{a:+}x{b:+}");
        let spaced = format!("  x ^ 2 {} {} x {} {} ", if a < 0 { '-' } else { '+' }, a.abs(), if b < 0 { '-' } else { '+' }, b.abs());
        prop_assert_eq!(
            parse_polynomial(&dense).unwrap().coefficients,
            parse_polynomial(&spaced).unwrap().coefficients
        );
    }
}
