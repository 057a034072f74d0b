use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn dqalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dqalg")).args(args).env_remove("DQ_BRUTE_FORCE_BUDGET").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn ok(args: &[&str]) -> Value {
    let out = dqalg(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    json_of(&out)
}

fn shipped(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", &path]);
    let out = dqalg(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    path
}

#[test]
fn enumerate_counts_classes() {
    let v = ok(&["enumerate", "--n", "5", "--q", "2", "--count-classes"]);
    assert_eq!(v["classes"], 20);
    assert_eq!(v["field_caveat"], true);
    let v = ok(&["enumerate", "--n", "6", "--q", "2", "--count-classes", "--ordered"]);
    assert_eq!(v["classes"], 29);
    assert_eq!(v["ordered"], json!([[3, 3], [2, 4], [4, 2]]));
    let v = ok(&["enumerate", "--n", "14", "--q", "5"]);
    let counts: Vec<u64> = v["tuples"].as_array().unwrap().iter().map(|t| t["ordered_count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![5, 30, 10]);
    assert_eq!(v["parameter_name"], "s");
}

#[test]
fn construct_then_analyze_scalars() {
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "a.json", &["--type", "1", "--blocks", "1"]);
    let v = ok(&["analyze", &a]);
    assert_eq!(v["min_q"], 1);
    assert_eq!(v["dim"], 1);
    assert_eq!(v["maximal"], true);
}

#[test]
fn analyze_shipped_example() {
    let path = shipped("m2_dual_numbers.json");
    let v = ok(&["analyze", path.to_str().unwrap()]);
    assert_eq!(v["type"], json!([2, 2]));
    assert_eq!(v["dim"], 8);
    assert_eq!(v["min_q"], "not-Dq");
    assert_eq!(v["maximal"], false);
    let perm = json!([["1", "0", "0", "0"], ["0", "0", "1", "0"], ["0", "1", "0", "0"], ["0", "0", "0", "1"]]);
    assert_eq!(v["conjugator"], perm);
}

#[test]
fn every_shipped_example_is_closed() {
    for entry in std::fs::read_dir(shipped("")).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|e| e == "json") {
            ok(&["analyze", p.to_str().unwrap()]);
        }
    }
}

#[test]
fn analyze_block_type_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "a.json", &["--type", "2,3", "--blocks", "1,1", "--field", "prime:101"]);
    let v = ok(&["analyze", &a]);
    assert_eq!(v["min_q"], 2);
    assert_eq!(v["type"], json!([2, 3]));
    assert_eq!(v["maximal"], true);
    assert_eq!(v["block_ids"], json!([[2, 1], [3, 1]]));
    assert_eq!(v["invariants"]["commutator_times_radical"], 4);
    assert_eq!(v["field_caveat"], true);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(doc["field"], json!({"kind": "prime", "p": 101}));
    assert!(doc["basis"][0][0][0].is_u64());
}

#[test]
fn blocks_may_be_documents() {
    let dir = tempfile::tempdir().unwrap();
    let block = construct(dir.path(), "block.json", &["--type", "3", "--blocks", "2"]);
    let from_doc = construct(dir.path(), "a.json", &["--type", "2,3", "--blocks", &format!("1,{block}")]);
    let from_k = construct(dir.path(), "b.json", &["--type", "2,3", "--blocks", "1,2"]);
    let read = |p: &str| -> Value { serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap() };
    assert_eq!(read(&from_doc)["basis"], read(&from_k)["basis"]);
}

#[test]
fn classify_and_conjugate_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "a.json", &["--type", "2,3", "--blocks", "1,1"]);
    let b = construct(dir.path(), "b.json", &["--type", "2,3", "--blocks", "1,2"]);
    let v = ok(&["classify", &a, &b]);
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["certificate"], Value::Null);

    let x = dir.path().join("x.json");
    let grid = json!([
        ["1", "2", "0", "0", "1"],
        ["0", "1", "0", "3", "0"],
        ["1", "0", "1", "0", "0"],
        ["0", "0", "0", "1", "0"],
        ["0", "1", "0", "0", "1"]
    ]);
    std::fs::write(&x, json!({"field": {"kind": "rational"}, "matrix": grid}).to_string()).unwrap();
    let c = dir.path().join("c.json");
    let out = dqalg(&["conjugate", &a, "--by", x.to_str().unwrap(), "-o", c.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let v = ok(&["classify", &a, c.to_str().unwrap()]);
    assert_eq!(v["isomorphic"], true);
    assert_ne!(v["certificate"], Value::Null);
    assert_eq!(v["blocks_right"], json!([[2, 1], [3, 1]]));
}

#[test]
fn serialization_is_deterministic_and_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "a.json", &["--type", "3,2", "--blocks", "4,2"]);
    let b = construct(dir.path(), "b.json", &["--type", "3,2", "--blocks", "4,2"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let x = dir.path().join("id.json");
    let id = json!({"field": {"kind": "rational"}, "matrix": [
        [1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]
    ]});
    std::fs::write(&x, id.to_string()).unwrap();
    let v = ok(&["conjugate", &a, "--by", x.to_str().unwrap()]);
    let orig: Value = serde_json::from_str(&std::fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!(v["basis"], orig["basis"]);
    assert_eq!(v["field"], orig["field"]);
}

#[test]
fn verify_structural_and_brute_force() {
    let dir = tempfile::tempdir().unwrap();
    let a = construct(dir.path(), "a.json", &["--max-dim", "4,2", "--field", "prime:101"]);
    let v = ok(&["verify", &a, "--q", "2", "--brute-force"]);
    assert_eq!(v["structural"], true);
    assert_eq!(v["brute_force"], true);
    let v = ok(&["verify", &a, "--q", "1", "--brute-force"]);
    assert_eq!(v["structural"], false);
    assert_eq!(v["brute_force"], false);

    let out = Command::new(env!("CARGO_BIN_EXE_dqalg"))
        .args(["verify", &a, "--q", "2", "--brute-force"])
        .env("DQ_BRUTE_FORCE_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["code"], "budget_exceeded");
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let doc = json!({"field": {"kind": "rational"}, "n": 2, "basis": [[["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]]});
    std::fs::write(&bad, doc.to_string()).unwrap();
    let out = dqalg(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["code"], "closure_violation");

    let out = dqalg(&["analyze", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["code"], "io_error");

    std::fs::write(&bad, "{not json").unwrap();
    let out = dqalg(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["code"], "parse_error");

    let out = dqalg(&["enumerate", "--n", "3", "--q", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["code"], "invalid_q");

    let out = dqalg(&["construct", "--type", "4", "--blocks", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["code"], "inadmissible_id");

    let m2 = shipped("m2_dual_numbers.json");
    let out = dqalg(&["classify", m2.to_str().unwrap(), m2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["code"], "not_block_type_max_dim");
}
