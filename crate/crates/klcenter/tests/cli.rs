//! Black-box tests of the `klcenter` binary: subcommands, file formats and
//! exit codes.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_klcenter");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn klcenter")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(BIN)
        .args(args)
        .env(key, value)
        .output()
        .expect("spawn klcenter")
}

fn write(path: &Path, content: &str) {
    fs::write(path, content).unwrap();
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

const TWO_CURVES: &str = concat!(
    r#"{"id":"a","points":[[0,0],[10,0]]}"#,
    "\n",
    r#"{"id":"b","points":[[0,1],[10,1]]}"#,
    "\n"
);

#[test]
fn distance_discrete_and_continuous() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("curves.jsonl");
    write(&input, TWO_CURVES);
    let v = stdout_json(&run(&["distance", input.to_str().unwrap()]));
    assert!((v["distance"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let v = stdout_json(&run(&[
        "distance",
        "--metric",
        "continuous",
        input.to_str().unwrap(),
    ]));
    assert!((v["distance"].as_f64().unwrap() - 1.0).abs() < 1e-6);
}

#[test]
fn distance_by_id_and_csv_input() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("curves.csv");
    write(&input, "id,x,y\na,0,0\na,10,0\nb,0,3\nb,10,3\n");
    let v = stdout_json(&run(&[
        "distance",
        input.to_str().unwrap(),
        "--ids",
        "b",
        "a",
    ]));
    assert_eq!(v["a"], "b");
    assert!((v["distance"].as_f64().unwrap() - 3.0).abs() < 1e-12);
}

#[test]
fn malformed_input_exits_1() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("bad.jsonl");
    write(&input, "this is not json\n");
    let out = run(&["distance", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["distance", dir.path().join("missing.jsonl").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn simplify_min_size_writes_output() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("in.jsonl");
    let output = dir.path().join("out.jsonl");
    write(&input, "{\"id\":\"c\",\"points\":[[0],[0.5],[10]]}\n");
    let out = run(&[
        "simplify",
        input.to_str().unwrap(),
        "--delta",
        "1",
        "-o",
        output.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&output).unwrap();
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 2);
}

#[test]
fn simplify_geojson_emission() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("in.jsonl");
    let output = dir.path().join("out.jsonl");
    write(&input, TWO_CURVES);
    let out = run(&[
        "--emit-geojson",
        "simplify",
        input.to_str().unwrap(),
        "--ell",
        "2",
        "-o",
        output.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let geo: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out.geojson")).unwrap())
            .unwrap();
    assert_eq!(geo["type"], "FeatureCollection");
    assert_eq!(geo["features"].as_array().unwrap().len(), 2);
}

#[test]
fn cluster_reports_radius_and_assignment() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("in.jsonl");
    write(
        &input,
        concat!(
            r#"{"id":"a1","points":[[0,0],[1,0]]}"#,
            "\n",
            r#"{"id":"a2","points":[[0,0.1],[1,0.1]]}"#,
            "\n",
            r#"{"id":"b1","points":[[50,0],[51,0]]}"#,
            "\n"
        ),
    );
    let v = stdout_json(&run(&[
        "cluster",
        input.to_str().unwrap(),
        "-k",
        "2",
        "--ell",
        "2",
    ]));
    assert!(v["radius"].as_f64().unwrap() <= 0.11);
    assert_eq!(v["assignment"]["a1"], v["assignment"]["a2"]);
    assert_ne!(v["assignment"]["a1"], v["assignment"]["b1"]);
}

#[test]
fn decide_infeasible_exits_2() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("in.jsonl");
    write(&input, TWO_CURVES);
    // Complexity budget 1 with far-apart vertices: no radius-0.01 center.
    let out = run(&[
        "decide",
        input.to_str().unwrap(),
        "-k",
        "1",
        "--ell",
        "1",
        "--delta",
        "0.01",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&[
        "decide",
        input.to_str().unwrap(),
        "-k",
        "1",
        "--ell",
        "2",
        "--delta",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_hard_extract_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("inst.jsonl");
    let out = run(&[
        "gen-hard",
        "--variant",
        "1d-discrete",
        "--strings",
        "ABB",
        "BBA",
        "ABA",
        "--t",
        "4",
        "-o",
        inst.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let sidecar: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("inst.instance.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(sidecar["variant"], "1d-discrete");
    assert_eq!(sidecar["t"], 4);
    assert_eq!(sidecar["ell"], 9);
    assert_eq!(sidecar["target_radius"], 1.0);

    // A radius-1 center: the canonical curve for the superstring ABBA.
    let center = dir.path().join("center.jsonl");
    write(
        &center,
        r#"{"id":"c","points":[[0],[-2],[0],[2],[0],[2],[0],[-2],[0]]}"#,
    );
    let v = stdout_json(&run(&[
        "verify",
        inst.to_str().unwrap(),
        center.to_str().unwrap(),
    ]));
    assert_eq!(v["ok"], true);
    assert!((v["radius"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    let out = run(&[
        "verify",
        inst.to_str().unwrap(),
        center.to_str().unwrap(),
        "--delta",
        "0.99",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["extract", center.to_str().unwrap(), "--variant", "1d-discrete"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ABBA");
}

#[test]
fn gen_hard_2d_and_extract() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("inst2d.jsonl");
    let out = run(&[
        "gen-hard",
        "--variant",
        "2d-discrete",
        "--strings",
        "AB",
        "--t",
        "2",
        "-o",
        inst.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let sidecar: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("inst2d.instance.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(sidecar["s"], 6);
    assert_eq!(sidecar["ell"], 42);
}

#[test]
fn meb_variant_requires_split() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("meb.jsonl");
    let out = run(&[
        "gen-hard",
        "--variant",
        "meb-1d-discrete",
        "--strings",
        "AB",
        "--t",
        "2",
        "-o",
        inst.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "gen-hard",
        "--variant",
        "meb-1d-discrete",
        "--strings",
        "AB",
        "--t",
        "2",
        "--j",
        "1",
        "--jp",
        "1",
        "-o",
        inst.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // Base gadget curve plus the two length-bounding curves.
    let lines = fs::read_to_string(&inst).unwrap().trim().lines().count();
    assert_eq!(lines, 3);
}

#[test]
fn frechet_tol_env_is_validated() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("in.jsonl");
    write(&input, TWO_CURVES);
    let out = run_env(
        &["distance", "--metric", "continuous", input.to_str().unwrap()],
        "FRECHET_TOL",
        "not-a-number",
    );
    assert_eq!(out.status.code(), Some(1));
    let out = run_env(
        &["distance", "--metric", "continuous", input.to_str().unwrap()],
        "FRECHET_TOL",
        "1e-3",
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn determinism_byte_identical_output() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("in.jsonl");
    write(&input, TWO_CURVES);
    let args = ["cluster", input.to_str().unwrap(), "-k", "1", "--ell", "2"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}
