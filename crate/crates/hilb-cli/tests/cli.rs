//! End-to-end tests of the `hilb` binary: exit-code contract, the reference
//! command examples, and byte-identical determinism.

use std::process::{Command, Output};

fn hilb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilb"))
        .args(args)
        .output()
        .expect("spawn hilb")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn matrix_m0_is_1x1_zero() {
    let out = hilb(&["matrix", "--m", "0", "--n", "1", "--divisor", "D"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[0][0] = 0"));
    assert!(!text.contains("[1]"), "expected a 1x1 matrix:\n{text}");
}

#[test]
fn matrix_rejects_bad_selector() {
    assert_eq!(code(&hilb(&["matrix", "--m", "2", "--n", "1", "--divisor", "E:1"])), 2);
    assert_eq!(code(&hilb(&["matrix", "--m", "2", "--n", "1", "--divisor", "omega:2"])), 2);
    assert_eq!(code(&hilb(&["matrix", "--m", "2", "--n", "0", "--divisor", "D"])), 2);
}

#[test]
fn matrix_json_has_schema_fields() {
    let out = hilb(&["matrix", "--m", "2", "--n", "1", "--divisor", "D", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["m", "n", "basis", "classical", "quantum"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["basis"].as_array().unwrap().len(), 5);
    for t in v["quantum"].as_array().unwrap() {
        assert_eq!(t["shape"], "dlog_q");
    }
}

#[test]
fn matrix_output_is_deterministic() {
    let args = ["matrix", "--m", "2", "--n", "2", "--divisor", "omega:2", "--format", "latex"];
    let a = hilb(&args);
    let b = hilb(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn verify_unknown_suite_exits_2() {
    assert_eq!(code(&hilb(&["verify", "nosuch"])), 2);
}

#[test]
fn verify_fixedlemma3_single_interval_passes() {
    let out = hilb(&[
        "verify", "fixedlemma3", "--m", "2", "--n", "1", "--i", "1", "--j", "2",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result: pass"), "{text}");
    assert!(!text.contains("[FAIL]"), "{text}");
}

#[test]
fn verify_budget_declares_skips() {
    let out = hilb(&["verify", "commute", "--m", "3", "--n", "2", "--max-seconds", "0"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[skip]"), "expected a declared skip:\n{text}");
}

#[test]
fn two_point_splits_punctual_and_nonpunctual() {
    let out = hilb(&["two-point", "2(w1)", "2(w1)", "--n", "1"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let p = text.find("punctual:").unwrap();
    let np = text.find("non-punctual:").unwrap();
    assert!(p < np);
    // Both parts are nonzero here, and they are never summed into one scalar.
    assert!(text.contains("log((1-(-q)^2)/(1-(-q)))"), "{text}");
    assert!(text.contains("log(1-(-q)^1*s1)"), "{text}");
}

#[test]
fn two_point_empty_is_zero_both_parts() {
    let out = hilb(&["two-point", "", "", "--n", "1"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "punctual:\n  0\nnon-punctual:\n  0\n");
}

#[test]
fn two_point_rejects_mismatches() {
    // Grade mismatch.
    assert_eq!(code(&hilb(&["two-point", "2(w1)", "1(1)", "--n", "1"])), 2);
    // Parse error.
    assert_eq!(code(&hilb(&["two-point", "2(w9", "2(w1)", "--n", "1"])), 2);
    // Label out of range for the surface.
    assert_eq!(code(&hilb(&["two-point", "2(w2)", "2(w2)", "--n", "1"])), 2);
    // Declared grade disagrees with the inputs.
    assert_eq!(code(&hilb(&["two-point", "2(w1)", "2(w1)", "--n", "1", "--m", "3"])), 2);
    // Fixed-basis slot count must be n+1.
    assert_eq!(
        code(&hilb(&["two-point", "[2|]", "[1,1|]", "--n", "2", "--basis", "fixed"])),
        2
    );
}

#[test]
fn two_point_fixed_basis_works() {
    let out = hilb(&["two-point", "[2|]", "[1,1|]", "--n", "1", "--basis", "fixed"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("non-punctual:"), "{text}");
}
