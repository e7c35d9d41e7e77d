use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    run_env(args, None)
}

fn run_env(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lorenz-knots"));
    cmd.args(args).env_remove("LORENZ_KNOTS_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("LORENZ_KNOTS_CACHE_DIR", dir);
    }
    cmd.output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn enumerate_counts() {
    assert_eq!(lines(&run(&["enumerate", "--template", "0,0", "--max-len", "1"])).len(), 2);
    assert_eq!(lines(&run(&["enumerate", "--template", "0,0", "--max-len", "3"])).len(), 5);
    let records = lines(&run(&["enumerate", "--template", "0,-2", "--max-len", "4"]));
    let r = records.iter().find(|r| r["word"] == "xyyy").unwrap();
    assert_eq!(r["exponent_sum"], -3);
    assert_eq!(r["m"], 0);
    assert_eq!(r["n"], -2);
    assert_eq!(r["mirrored"], false);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["alexander"], serde_json::json!([[-1, 1], [0, -1], [1, 1]]));
}

#[test]
fn enumerate_into_cache_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_env(&["enumerate", "--template", "~1,-1", "--max-len", "5"], Some(dir.path()));
    assert_eq!(code(&o), 0);
    let file = dir.path().join("orbits_mirror_m1_n-1_j12.jsonl");
    let first = std::fs::read(&file).unwrap();
    assert_eq!(code(&run_env(&["enumerate", "--template", "~1,-1", "--max-len", "5"], Some(dir.path()))), 0);
    assert_eq!(std::fs::read(&file).unwrap(), first);
    // A shorter run merges into the existing file without dropping records.
    let flag = dir.path().to_str().unwrap();
    assert_eq!(code(&run(&["--cache-dir", flag, "enumerate", "--template", "~1,-1", "--max-len", "2"])), 0);
    assert_eq!(std::fs::read(&file).unwrap(), first);
    assert_eq!(std::str::from_utf8(&first).unwrap().lines().count(), 14);
}

#[test]
fn failed_enumerate_leaves_no_partial_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("records.jsonl");
    std::fs::write(&out, "not json\n").unwrap();
    let o = run(&["enumerate", "--template", "0,0", "--max-len", "6", "--output", out.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "not json\n");
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn invariants_command() {
    let o = run(&["invariants", "--template", "0,0", "xy"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["fingerprint"]["alexander"], serde_json::json!([[0, 1]]));
    assert_eq!(v["fingerprint"]["jones"], serde_json::json!([[0, 1]]));
    assert_eq!(v["jones_budget"], 12);

    let o = run(&["invariants", "--template", "0,0", "xyxy"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("proper power"));

    let v = json(&run(&["invariants", "--template", "0,-2", "yyyx"]));
    assert_eq!(v["word"], "xyyy");
    assert_eq!(v["fingerprint"]["alexander"], serde_json::json!([[-1, 1], [0, -1], [1, 1]]));
    assert_eq!(v["fingerprint"]["signature"], 2);
    assert_eq!(v["braid"]["strands"], 4);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["invariants", "--template", "0;0", "xy"])), 2);
    assert_eq!(code(&run(&["invariants", "--template", "0,0", "xz"])), 2);
    assert_eq!(code(&run(&["enumerate", "--template", "0,0"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["--jones-budget", "13", "invariants", "--template", "0,0", "x"])), 2);
    assert_eq!(code(&run(&["--help"])), 0);
    // Templates may start with a minus sign.
    assert_eq!(code(&run(&["invariants", "--template", "-1,-3", "xy"])), 0);
}

#[test]
fn verify_inclusion_command() {
    let o = run(&["verify-inclusion", "--sub", "0,1", "--super", "0,1", "--sub-len", "5", "--search-len", "5"]);
    assert_eq!(code(&o), 0);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&[
        "verify-inclusion", "--sub", "0,2", "--super", "0,0", "--sub-len", "6", "--search-len", "12", "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["unmatched"], serde_json::json!([]));
    assert_eq!(v["sub_max_len"], 6);
    assert_eq!(v["super_search_len"], 12);
    assert_eq!(v["jones_budget"], 12);

    let o = run(&["verify-inclusion", "--sub", "0,-2", "--super", "0,0", "--sub-len", "4", "--search-len", "12"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["unmatched"], serde_json::json!(["xyyy"]));
}

#[test]
fn find_composites_command() {
    for t in ["0,0", "0,1"] {
        let o = run(&["find-composites", "--template", t, "--max-len", "12", "--catalog-len", "10", "--expect-none"]);
        assert_eq!(code(&o), 0, "{t}");
        assert_eq!(json(&o)["composites"], serde_json::json!([]));
    }
    let o = run(&["find-composites", "--template", "0,0", "--max-len", "8", "--expect-some"]);
    assert_eq!(code(&o), 1);

    let dir = tempfile::tempdir().unwrap();
    let args = ["find-composites", "--template", "0,-1", "--max-len", "10", "--catalog-len", "5", "--expect-some"];
    let o = run_env(&args, Some(dir.path()));
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("catalog_len5_j12.json").exists());
    let v = json(&o);
    assert_eq!(v["catalog_len"], 5);
    let square = v["composites"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["fingerprint"]["determinant"] == 9 && r["fingerprint"]["signature"] == 0)
        .unwrap();
    let mut names: Vec<&str> = square["factor_names"].as_array().unwrap().iter().map(|n| n.as_str().unwrap()).collect();
    names.sort();
    assert_eq!(names, ["mirror trefoil", "trefoil"]);
    assert_eq!(square["evidence_level"], "full_jones");
    // The cached catalog gives the same report.
    assert_eq!(json(&run_env(&args, Some(dir.path()))), v);
}

#[test]
fn verify_sum_command() {
    let o = run(&["verify-sum", "--u", "x", "--v", "x", "--search-len", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["witness"], "x");

    let o = run(&["verify-sum", "--u", "xyy", "--v", "xyy", "--search-len", "14"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["target"], "0,-2");
    assert_eq!(v["search_len"], 14);
    assert!(v["witness"].is_string());

    let o = run(&["verify-sum", "--u", "xyy", "--v", "xyy", "--target", "0,0", "--search-len", "12"]);
    assert_eq!(code(&o), 1);
    assert!(json(&o)["witness"].is_null());
}

#[test]
fn emit_diagram_command() {
    let o = run(&["emit-diagram", "--template", "0,0", "xy", "--format", "text"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1   2\n|   |\n \\ /\n  /\n / \\\n|   |\n");

    let args = ["emit-diagram", "--template", "-1,2", "xxyxyy"];
    let svg = stdout(&run(&args));
    assert_eq!(stdout(&run(&args)), svg);
    assert!(svg.starts_with("<svg ") && svg.trim_end().ends_with("</svg>"));
    let braid = json(&run(&["invariants", "--template", "-1,2", "xxyxyy"]))["braid"].clone();
    let gens = braid["generators"].as_array().unwrap().len();
    assert_eq!(svg.matches(r#"class="crossing""#).count(), gens);

    let simplified = stdout(&run(&["emit-diagram", "--template", "0,0", "xy", "--format", "text", "--simplify"]));
    assert_eq!(simplified, "1\n|\n");
}

#[test]
fn build_catalog_command() {
    let v = json(&run(&["build-catalog", "--max-len", "2"]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 1);
    assert_eq!(v["entries"][0]["name"], "unknot");
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run_env(&["build-catalog", "--max-len", "5"], Some(dir.path()))), 0);
    let text = std::fs::read_to_string(dir.path().join("catalog_len5_j12.json")).unwrap();
    assert!(text.contains("\"mirror trefoil\""));
    assert_eq!(code(&run(&["build-catalog", "--max-len", "0"])), 2);
}
