use std::process::Command;

use peakalg::exactmath::Rational;
use peakalg::peakcli::render::{ElementJson, MatrixJson};
use peakalg::peakcli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use peakalg::reptheory::peak_cartan;
use peakalg::symcore::{type_a_idempotents, Elem};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("peakalg").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn zeta_a4_ends_with_the_alternating_term() {
    let (code, out, _) = call(&["zeta", "--kind", "A", "--n", "4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().ends_with("- 1/4 S^{1.1.1.1}"), "{out}");
}

#[test]
fn level_two_zeta_ends_with_one_eighth() {
    let (code, out, _) = call(&["zeta", "--kind", "level", "--n", "4", "--r", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.trim_end().ends_with("- 1/8 S^{1.1.1.1}"), "{out}");
}

#[test]
fn idempotent_counts() {
    for (args, count) in [
        (vec!["--family", "A", "--n", "5"], 7),
        (vec!["--family", "peak", "--n", "5", "--r", "2"], 6),
        (vec!["--family", "B", "--n", "2"], 4),
    ] {
        let mut full = vec!["idempotents"];
        full.extend(args);
        let (code, out, _) = call(&full);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["elements"].as_array().unwrap().len(), count, "{full:?}");
        for key in ["idempotent", "orthogonal", "complete"] {
            assert_eq!(v[key], true);
        }
    }
}

#[test]
fn idempotents_json_round_trips() {
    let (_, out, _) = call(&["idempotents", "--family", "A", "--n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let lib = type_a_idempotents(4).unwrap();
    for item in v["elements"].as_array().unwrap() {
        let label = item["label"].as_str().unwrap();
        let e: ElementJson = serde_json::from_value(item["element"].clone()).unwrap();
        let e: Elem<Rational> = e.to_elem().unwrap();
        let (_, want) = lib.iter().find(|(l, _)| l.to_string() == label).unwrap();
        assert_eq!(&e, want, "{label}");
    }
}

#[test]
fn cartan_latex_small_cases() {
    let (code, out, _) = call(&["cartan", "--n", "4", "--r", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("C_4^{(2)} ="));
    assert!(out.contains("1 & q & . & . \\\\"), "{out}");

    let (_, out, _) = call(&["cartan", "--n", "3", "--r", "3"]);
    assert!(out.contains("1 & q & . \\\\"), "{out}");

    let (_, out, _) = call(&["cartan", "--n", "2", "--r", "2"]);
    assert!(out.contains("1 & . \\\\") && out.contains(". & 1\n"), "{out}");
}

#[test]
fn cartan_json_round_trips() {
    let (code, out, _) = call(&["cartan", "--n", "5", "--r", "2", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let m: MatrixJson = serde_json::from_str(&out).unwrap();
    assert_eq!(m.to_matrix().unwrap(), peak_cartan(5, 2).unwrap().1.matrix());
}

#[test]
fn quiver_of_p4() {
    let (code, out, _) = call(&["quiver", "--n", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "0;3,1 -> 4; x1");
}

#[test]
fn conjecture_agrees_for_small_n() {
    let (code, out, _) = call(&["conjecture", "--n", "5", "--format", "text"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, _, _) = call(&["conjecture", "--n", "5", "--graded"]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["verify-paper", "--sections", "peak", "--max-n", "4"]).0, EXIT_OK);
    // The literal type A Cartan formula is among the checks and fails.
    let (code, out, _) = call(&["verify-paper", "--sections", "typeA", "--max-n", "3"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("FAIL typeA/cartan-formula/2"));

    let (code, _, err) = call(&["zeta", "--kind", "level", "--n", "3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("--r"));
    assert_eq!(call(&["zeta", "--kind", "A", "--n", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify-paper", "--sections", "nope"]).0, EXIT_USAGE);

    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify-paper"));
}

#[test]
fn verify_json_is_stable() {
    let args = ["verify-paper", "--sections", "peak,bridge", "--max-n", "4", "--format", "json"];
    let strip = |s: String| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v
    };
    let a = strip(call(&args).1);
    let b = strip(call(&args).1);
    assert_eq!(a, b);
    assert_eq!(a["parameters"]["sections"], "peak,bridge");
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_peakalg"))
        .args(["zeta", "--kind", "A", "--n", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "zeta_2 = S^{2} - 1/2 S^{1.1}");

    let out = Command::new(env!("CARGO_BIN_EXE_peakalg")).arg("cartan").output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
