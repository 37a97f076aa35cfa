use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
}

fn decorel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_decorel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_out(args: &[&str]) -> Value {
    let out = decorel(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn code(args: &[&str]) -> Option<i32> {
    decorel(args).status.code()
}

#[test]
fn eval_corelation_merges_connected_feet() {
    let v = json_out(&[
        "eval",
        "--category",
        "corel",
        data("intro_cospans.json").to_str().unwrap(),
    ]);
    assert_eq!(v["blocks"], json!([["x1", "x2", "z1"], ["z2"]]));
    assert_eq!(v["system"], "epi-mono");
    let v = json_out(&[
        "eval",
        "--category",
        "cospan",
        data("intro_cospans.json").to_str().unwrap(),
    ]);
    assert_eq!(v["apex"], 5);
}

#[test]
fn eval_amplifiers_as_matrix() {
    let f = data("amplifiers.json");
    let v = json_out(&["eval", "--category", "rigmat", f.to_str().unwrap()]);
    assert_eq!(v["rows"], 3);
    assert_eq!(v["cols"], 4);
    assert_eq!(v["entries"][0][0], "24/1");
    assert_eq!(v["entries"][1][2], "67/10");
    assert_eq!(v["entries"][2][2], "2/1");
    assert_eq!(json_out(&["matrix-of", f.to_str().unwrap()]), v);
}

#[test]
fn eval_identity_and_linear_relations() {
    let v = json_out(&["eval", data("identity.json").to_str().unwrap()]);
    assert_eq!(
        v["blocks"],
        json!([["x1", "y1"], ["x2", "y2"], ["x3", "y3"]])
    );
    let v = json_out(&[
        "eval",
        "--category",
        "lincorel",
        data("scalings.json").to_str().unwrap(),
    ]);
    assert_eq!(v["basis"], json!([["1/1", "6/1", "6/1"]]));
}

#[test]
fn blackbox_series_circuit() {
    let v = json_out(&[
        "blackbox",
        "--category",
        "circuit",
        data("series_circuit.json").to_str().unwrap(),
    ]);
    assert_eq!(v["graph"]["edges"], json!([[0, 1, "R1"], [1, 2, "R2"]]));
    assert_eq!(v["system"], "all-iso");
}

#[test]
fn output_is_byte_stable_and_can_go_to_a_file() {
    let f = data("intro_cospans.json");
    let f = f.to_str().unwrap();
    let a = decorel(&["eval", "--category", "corel", f]).stdout;
    let b = decorel(&["eval", "--category", "corel", f]).stdout;
    assert_eq!(a, b);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("result.json");
    let run = decorel(&[
        "eval",
        "--category",
        "corel",
        f,
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(run.status.success());
    assert!(run.stdout.is_empty());
    assert_eq!(std::fs::read(&out).unwrap(), a);
}

#[test]
fn exit_codes_distinguish_failures() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let broken = write("broken.json", "{\"expr\": ");
    let unknown = write("unknown.json", r#"{"expr": {"gen": "nowhere"}}"#);

    assert_eq!(code(&["eval", &broken]), Some(2));
    assert_eq!(
        code(&["eval", data("ill_typed.json").to_str().unwrap()]),
        Some(3)
    );
    assert_eq!(code(&["eval", &unknown]), Some(4));
    assert_eq!(
        code(&[
            "eval",
            "--category",
            "nonsense",
            data("identity.json").to_str().unwrap()
        ]),
        Some(4)
    );
    assert_eq!(code(&["frobnicate"]), Some(2));

    let err = decorel(&["eval", data("ill_typed.json").to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("expr.compose"));
}

#[test]
fn check_passes_on_lawful_categories() {
    assert_eq!(code(&["check", "cospan", "3", "42"]), Some(0));
    assert_eq!(code(&["check", "epi-mono-corel", "3", "42"]), Some(0));
    assert_eq!(
        code(&["check", "--category", "rig-corel", "--rig", "nat"]),
        Some(0)
    );
}

#[test]
fn check_fails_on_the_corrupted_fixture() {
    let out = decorel(&["check", "corrupted-cospan", "2", "42"]);
    assert_eq!(out.status.code(), Some(1));
}
