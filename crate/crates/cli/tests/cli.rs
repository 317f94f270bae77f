use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn homind(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homind"))
        .args(args)
        .env_remove("HOMIND_JSON")
        .env_remove("HOMIND_SEED")
        .env_remove("HOMIND_MAX_N")
        .output()
        .unwrap()
}

fn report(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = homind(&all);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)));
    (v, out.status.code().unwrap())
}

#[test]
fn hom_count_reports() {
    let (r, code) = report(&["hom", "count", "C4", "K3"]);
    assert_eq!(code, 0);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["command"], "hom count");
    assert_eq!(r["payload"]["count"], "18");
    let (r, _) = report(&["hom", "count", "C3", "2xC3", "--bigint"]);
    assert_eq!(r["payload"]["count"], "12");
    let out = homind(&["hom", "count", "C3", "C6"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "hom(Bw, EhEG) = 0");
}

#[test]
fn distinguish_reports_bound() {
    let (r, _) = report(&["hom", "distinguish", "2xC3", "C6", "--family", "trees", "--max-n", "5"]);
    assert_eq!(r["payload"]["result"]["witness"], Value::Null);
    assert_eq!(r["payload"]["result"]["verified_up_to_n"], 5);
    assert_eq!(r["bounds"].as_array().unwrap().len(), 1);
    let (r, _) = report(&["hom", "distinguish", "2xC3", "C6"]);
    assert_eq!(r["payload"]["result"]["witness"]["pattern"], "Bw");
}

#[test]
fn cfi_build_emits_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.g6");
    let (r, code) = report(&["cfi", "build", "C3", "--emit", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["payload"]["even"], "EQhO");
    assert_eq!(fs::read_to_string(&path).unwrap(), "EQhO\nEKhO\n");
}

#[test]
fn oddo_verify_exit_codes() {
    let (r, code) = report(&["oddo", "verify", "P4", "K2", "--map", "0,1,0,1"]);
    assert_eq!((r["payload"]["holds"].clone(), code), (Value::Bool(true), 0));
    let (r, code) = report(&["oddo", "verify", "C4", "K2", "--map", "0,1,0,1"]);
    assert_eq!((r["payload"]["holds"].clone(), code), (Value::Bool(false), 1));
    let out = homind(&["oddo", "verify", "C4", "K2", "--map", "0,0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oddo_search_and_reductions() {
    let (r, _) = report(&["oddo", "search", "C9", "C3"]);
    assert_eq!(r["payload"]["found"], true);
    let (r, _) = report(&["oddo", "search", "C6", "C3"]);
    assert_eq!(r["payload"]["found"], false);
    let (r, _) = report(&["oddo", "search", "V8", "K5"]);
    assert_eq!(r["payload"]["found"], false);
    let (r, _) = report(&["reduce", "separator", "P4", "K2", "--map", "0,1,0,1", "--set", "0,3"]);
    assert_eq!(r["payload"]["minor_of_host"], true);
    assert_eq!(r["payload"]["reduction"]["cert"]["source"], "A_");
    let (r, code) = report(&["reduce", "cut", "F{eCG", "C3", "--map", "0,1,2,1,2,1,2", "--vertex", "0"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["payload"]["cert"]["source"], "Bw");
    let (r, _) = report(&["reduce", "tree-model", "P5", "P5", "--map", "0,1,2,3,4"]);
    assert_eq!(r["payload"]["rho"], serde_json::json!([0, 1, 2, 3, 4]));
}

#[test]
fn class_commands() {
    let (r, _) = report(&["class", "check", "K5", "--predicate", "planar", "--predicate", "p_k:1"]);
    assert_eq!(r["payload"]["classes"][0]["member"], false);
    let (r, _) = report(&["class", "distance", "K5", "--predicate", "planar"]);
    assert_eq!(r["payload"]["deletion_distance"], 1);
    let out = homind(&["class", "check", "K5", "--predicate", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn contractor_round_trip_through_file() {
    let (r, code) = report(&["contractor", "solve", "K3", "C5"]);
    assert_eq!(code, 0, "{r}");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("alpha.json");
    fs::write(&path, r["payload"]["contractor"].to_string()).unwrap();
    let (r, code) = report(&["contractor", "simulate", "K4", "--edge", "0,1", "C5", "--contractor", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["payload"]["agree"], true);
    assert_eq!(r["payload"]["simulated"], r["payload"]["direct"]);
    let out = homind(&["contractor", "solve", "P3", "P3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn suites_and_replay() {
    let (a, code) = report(&["suite", "run", "contractor", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(a["seed"], 7);
    let (b, _) = report(&["suite", "run", "contractor", "--seed", "7"]);
    assert_eq!(a["payload"], b["payload"]);
    assert_eq!(a["parameters"], b["parameters"]);
    let (c, _) = report(&["suite", "run", "contractor"]);
    assert_ne!(a["payload"], c["payload"]);
    let out = homind(&["suite", "run", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
    let out = homind(&["suite", "run", "tree-model"]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS tree-model"));
}

#[test]
fn environment_overrides_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_homind"))
        .args(["suite", "run", "ground-truth"])
        .env("HOMIND_JSON", "1")
        .env("HOMIND_SEED", "99")
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["seed"], 99);
    assert_eq!(r["passed"], true);
}

#[test]
fn corpus_ingest() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    fs::write(&input, "A_\nA_\nBw\n").unwrap();
    let out_dir = dir.path().join("corpus");
    let (r, code) = report(&["corpus", "ingest", input.to_str().unwrap(), "--out", out_dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["payload"]["graphs"], 2);
    assert!(out_dir.join("index.json").exists());
    fs::write(&input, "A_\nzz\n").unwrap();
    let out = homind(&["corpus", "ingest", input.to_str().unwrap(), "--out", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("in.g6:2"));
}
