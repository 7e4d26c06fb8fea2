use std::path::{Path, PathBuf};
use std::process::Command;

use blockcolor_cli::{run, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS};
use serde_json::Value;

fn repo() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn data(name: &str) -> String {
    repo().join("data").join(name).to_string_lossy().into_owned()
}

fn invoke(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut argv = vec!["blockcolor"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn assert_schema(schema: &str, doc: &Value) {
    let path = repo().join("schemas").join(format!("{schema}.schema.json"));
    let schema_doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema_doc).expect("schema compiles");
    let msgs: Vec<String> = match compiled.validate(doc) {
        Ok(()) => return,
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("output does not match {schema}: {msgs:?}\n{doc}");
}

/// Runs a command that must succeed with JSON output matching `schema`.
fn json_ok(schema: &str, args: &[&str]) -> Value {
    let (code, out) = invoke(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {out}");
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_schema(schema, &doc);
    doc
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn params_on_pendant_family() {
    let doc = json_ok("params", &["params", &data("clique_with_pendants_k2.json")]);
    assert_eq!(doc["n"], 14);
    assert_eq!(doc["alpha_min"], 4);
    assert_eq!(doc["window"], serde_json::json!([3, 4]));
}

#[test]
fn binpack_example_says_no() {
    let (code, out) = invoke(&["exact", "binpack", &data("example_instance.json")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "NO");
    let doc = json_ok("exact-binpack", &["exact", "binpack", "--json", &data("example_instance.json")]);
    assert_eq!(doc["feasible"], false);
}

#[test]
fn binpack_yes_reports_bins() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_temp(&dir, "i.json", r#"{"A":[2,2,2,2],"k":2,"B":4}"#);
    let (_, out) = invoke(&["exact", "binpack", &inst]);
    assert_eq!(out.trim(), "YES");
    let doc = json_ok("exact-binpack", &["exact", "binpack", "--json", &inst]);
    assert_eq!(doc["bins"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_dc_le_alphamin_passes() {
    let doc = json_ok("sweep-report", &["verify", "dc-le-alphamin", "--max-n", "7", "--jobs", "2"]);
    assert_eq!(doc["scope"]["graphs"], 1 + 1 + 2 + 4 + 9 + 22 + 59);
    assert!(doc["violations"].as_array().unwrap().is_empty());
}

#[test]
fn other_sweeps_pass_small() {
    for check in ["conjecture", "characterization", "eq1"] {
        let doc = json_ok("sweep-report", &["verify", check, "--max-n", "6"]);
        assert_eq!(doc["check"], check);
        assert!(doc["violations"].as_array().unwrap().is_empty());
    }
}

#[test]
fn validate_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    json_ok("validate", &["validate", &data("clique_with_pendants_k3.json")]);
    let c4 = write_temp(&dir, "c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    let (code, out) = invoke(&["validate", &c4]);
    assert_eq!(code, EXIT_VIOLATIONS);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_schema("validate", &doc);
    assert_eq!(doc["valid"], false);
}

#[test]
fn levels_and_ais() {
    let doc = json_ok("levels", &["levels", &data("clique_with_pendants_k2.json")]);
    assert_eq!(doc["max_level"], 2);
    assert_eq!(doc["cut_vertices"], serde_json::json!([0, 1]));
    let doc = json_ok("ais", &["ais", &data("clique_with_pendants_k2.json"), "--w", "2"]);
    assert_eq!(doc["ais"], false);
    let doc = json_ok("ais", &["ais", &data("clique_with_pendants_k2.json"), "--w", "8", "--base", "0"]);
    assert_eq!(doc["base"], 0);
}

#[test]
fn char_gen_verify_decompose_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let doc = json_ok("char-gen", &["char", "gen", "--r", "3", "--seed", "11"]);
    assert_eq!(doc["seed"], 11);
    assert_eq!(doc["alpha_min"], serde_json::json!([1, 2, 3]));
    let cert = write_temp(&dir, "cert.json", &doc["certificate"].to_string());
    assert_schema("certificate", &doc["certificate"]);
    let report = json_ok("char-verify", &["char", "verify", &cert]);
    assert_eq!(report["valid"], true);
    let graph = write_temp(&dir, "g.json", &doc["graph"].to_string());
    assert_schema("graph", &doc["graph"]);
    let dec = json_ok("char-decompose", &["char", "decompose", &graph]);
    assert_eq!(dec["found"], true);
    assert_eq!(dec["alpha_min"], 3);
    assert_eq!(dec["certificate"]["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn char_verify_reports_broken_certificate() {
    let dir = tempfile::tempdir().unwrap();
    // K_3 has no cut vertex, so it cannot be G_1.
    let cert = write_temp(
        &dir,
        "bad.json",
        r#"{"base_vertex":0,"base_graph":{"n":3,"edges":[[0,1],[1,2],[0,2]]},"steps":[]}"#,
    );
    let (code, out) = invoke(&["char", "verify", &cert]);
    assert_eq!(code, EXIT_VIOLATIONS, "{out}");
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_schema("char-verify", &doc);
    assert_eq!(doc["violation"]["condition"], "A");
}

#[test]
fn gls_commands() {
    let doc = json_ok("gls-build", &["gls", "build", &data("example_instance.json")]);
    assert_eq!(doc["order"], 68);
    assert_eq!(doc["omega"], 4);
    assert_eq!(doc["alpha_min"], 17);
    let (code, dot) = invoke(&["gls", "build", "--dot", &data("example_instance.json")]);
    assert_eq!(code, EXIT_OK);
    assert!(dot.starts_with("graph G {"));
    let doc = json_ok(
        "gls-color-uniform",
        &["gls", "color-uniform", "--a", "3", "--n", "4", "--k", "3", "--B", "4", "--t", "5"],
    );
    assert_eq!(doc["coloring"]["class_sizes"], serde_json::json!([14, 14, 14, 13, 13]));
    let doc = json_ok("gls-color-n2", &["gls", "color-n2", &data("example_instance.json")]);
    let mut sizes: Vec<u64> = doc["coloring"]["class_sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![11, 11, 11, 11, 12, 12]);
}

#[test]
fn exact_commands() {
    let g = data("clique_with_pendants_k2.json");
    let doc = json_ok("exact-chi-eq", &["exact", "chi-eq", &g]);
    assert_eq!(doc["chi_eq"], 4);
    assert_eq!(doc["in_window"], true);
    let doc = json_ok("exact-spectrum", &["exact", "spectrum", &g, "--cap", "6"]);
    assert_eq!(doc["feasible"], serde_json::json!([4, 5, 6]));
    let doc = json_ok("exact-dc", &["exact", "dc", &g]);
    assert_eq!(doc["count"], 2);
}

#[test]
fn enumerate_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("graphs");
    let doc = json_ok("enumerate", &["enumerate", "--max-n", "5", "--out", out_dir.to_str().unwrap()]);
    assert_eq!(doc["counts"], serde_json::json!([0, 1, 1, 2, 4, 9]));
    let files: Vec<_> = std::fs::read_dir(&out_dir).unwrap().collect();
    assert_eq!(files.len(), 17);
    for f in files {
        let text = std::fs::read_to_string(f.unwrap().path()).unwrap();
        assert_schema("graph", &serde_json::from_str(&text).unwrap());
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(invoke(&["nonsense"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["params", "/definitely/not/here.json"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["verify", "eq1", "--max-n", "4", "--jobs", "0"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["verify", "eq1", "--max-n", "99"]).0, EXIT_USAGE);
    assert_eq!(
        invoke(&["gls", "color-uniform", "--a", "3", "--n", "4", "--k", "3", "--B", "4", "--t", "4"]).0,
        EXIT_USAGE
    );
    let dir = tempfile::tempdir().unwrap();
    let c4 = write_temp(&dir, "c4.json", r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]}"#);
    assert_eq!(invoke(&["params", &c4]).0, EXIT_USAGE);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn exhausted_budget_is_internal() {
    let code = invoke(&["exact", "chi-eq", &data("clique_with_pendants_k3.json"), "--budget", "10"]).0;
    assert_eq!(code, EXIT_INTERNAL);
}

#[test]
fn binary_reads_jobs_from_environment() {
    let exe = env!("CARGO_BIN_EXE_blockcolor");
    let out = Command::new(exe)
        .args(["verify", "conjecture", "--max-n", "5"])
        .env("BLOCKCOLOR_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["jobs"], 2);
    let bad = Command::new(exe)
        .args(["verify", "conjecture", "--max-n", "5"])
        .env("BLOCKCOLOR_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}

#[test]
fn graph_json_round_trip_preserves_isomorphism_class() {
    let dir = tempfile::tempdir().unwrap();
    let doc = json_ok("char-gen", &["char", "gen", "--r", "2", "--seed", "3"]);
    let original: blockcolor::graph::GraphDoc = serde_json::from_value(doc["graph"].clone()).unwrap();
    let path = write_temp(&dir, "g.json", &serde_json::to_string(&original).unwrap());
    let back = blockcolor::io::read_graph_doc(Path::new(&path)).unwrap();
    let a = blockcolor::oracle::canonical_form(&original.to_graph().unwrap()).unwrap();
    let b = blockcolor::oracle::canonical_form(&back.to_graph().unwrap()).unwrap();
    assert_eq!(a, b);
}
