use std::path::PathBuf;
use std::process::{Command, Output};

use cutgroups::classify::cut_metacyclic_catalog;
use cutgroups::group::{dihedral, write_table_text};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cutgroups")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cutgroups-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn check_cut_metacyclic() {
    let o = run(&["check", "--group-json", r#"{"kind":"metacyclic","n":3,"t":2,"r":2,"l":3}"#, "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["is_cut"], true);
    assert_eq!(v["order"], 6);
}

#[test]
fn check_c5_gives_witness() {
    let o = run(&["check", "--abelian", "5", "--json"]);
    assert_eq!(code(&o), 1);
    let w = &json(&o)["verdicts"][0]["witness"];
    assert_eq!(w["exponent"], 2);
    assert_eq!(w["element"], 1);
}

#[test]
fn invalid_presentation_is_an_error() {
    let o = run(&["check", "--metacyclic", "0,2,1,1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid metacyclic presentation"));
}

#[test]
fn product_counterexample_both_methods() {
    let o = run(&["check", "--product", "metacyclic:8,2,3,8", "abelian:4", "--method", "both", "--json"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["agree"], true);
    assert_eq!(v["verdicts"][0]["witness"]["exponent"], 3);
    assert_eq!(v["verdicts"][1]["method"], "wedderburn");
}

#[test]
fn table_file_and_missing_file() {
    let path = scratch("s3.txt", &write_table_text(&dihedral(3)));
    let o = run(&["check", "--table", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let o = run(&["check", "--table", "/definitely/not/here.txt"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn wedderburn_components_report() {
    let o = run(&["wedderburn", "--metacyclic", "4,2,3,2", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let comps = v["components"].as_array().unwrap();
    // Q8: four copies of Q and one quaternion algebra.
    assert_eq!(comps.len(), 5);
    let dims: u64 = comps.iter().map(|c| c["dimension"].as_u64().unwrap()).sum();
    assert_eq!(dims, 8);
}

#[test]
fn height_and_camina() {
    let o = run(&["height", "--metacyclic", "4,2,3,2", "--json"]);
    assert_eq!(json(&o)["height"], 2);
    let o = run(&["height", "--metacyclic", "3,2,2,3", "--json"]);
    assert_eq!(json(&o)["height"], 0);
    assert_eq!(code(&run(&["camina", "--metacyclic", "4,2,3,4"])), 0);
    // Vacuously true for abelian groups; D12 fails on the coset aG'.
    assert_eq!(code(&run(&["camina", "--abelian", "6"])), 0);
    assert_eq!(code(&run(&["camina", "--metacyclic", "6,2,5,6"])), 1);
}

#[test]
fn classify_is_deterministic_across_jobs() {
    let a = run(&["classify", "--max-n", "8", "--t-set", "2", "--jobs", "1", "--json"]);
    let b = run(&["classify", "--max-n", "8", "--t-set", "2", "--jobs", "8", "--json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let orders: Vec<u64> = json(&a)["classes"].as_array().unwrap().iter().map(|c| c["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, vec![6, 8, 8, 12, 12, 16, 16]);
}

#[test]
fn corrupted_catalog_is_named() {
    let mut catalog = cut_metacyclic_catalog();
    catalog[0].presentation = cutgroups::group::MetacyclicPresentation::new(5, 2, 4, 5).unwrap();
    let path = scratch("bad_catalog.json", &serde_json::to_string(&catalog).unwrap());
    let o = run(&["verify-paper", "--only", "1", "--catalog", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    let out = String::from_utf8_lossy(&o.stdout);
    assert!(out.contains("FAIL"), "{out}");
    assert!(out.contains("catalog entry #0 (5,2,4,5)"), "{out}");
}

#[test]
fn verify_paper_errors() {
    assert_eq!(code(&run(&["verify-paper", "--catalog", "/definitely/not/here.json"])), 2);
    assert_eq!(code(&run(&["verify-paper", "--only", "11"])), 2);
    let o = run(&["verify-paper", "--only", "5,7", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["criteria"].as_array().unwrap().len(), 2);
}
