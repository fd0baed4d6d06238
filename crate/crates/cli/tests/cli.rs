use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use flatlat::io::{emit_json, BrReport, ClassifyReport, RealizabilityJson, SupercliqueReport};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn flatlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatlat"))
        .args(args)
        .env_remove("FLATLAT_LIMIT_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = flatlat(args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn six_element_lattice_is_not_realizable() {
    let lat = path("six_element.lat");
    let (code, _) = run(&["realizable", &lat]);
    assert_eq!(code, 1);
    let (code, out) = run(&["--format", "json", "realizable", &lat, "--method", "height3"]);
    assert_eq!(code, 1);
    let r: RealizabilityJson = serde_json::from_str(&out).unwrap();
    assert_eq!(
        r.supercliques,
        Some(vec![vec!["1".to_string(), "3".into()], vec!["2".into(), "3".into()]])
    );
    assert_eq!(emit_json(&r), out);
    let (code, out) = run(&["realizable", &lat, "--force-general", "--oracle"]);
    assert_eq!(code, 1);
    assert!(out.contains("flats of T_L: 8"), "{out}");
}

#[test]
fn example_complex_is_boolean_representable() {
    let cx = path("four_vertex.cx");
    assert_eq!(run(&["brsc", &cx]).0, 0);
    let (code, out) = run(&["brsc", &cx, "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!({"boolean_representable": true}));
    let (code, out) = run(&["brsc", &cx, "--verbose", "--oracle", "--format", "json"]);
    assert_eq!(code, 0);
    let r: BrReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.witnesses.unwrap().len(), 3);
    assert_eq!(run(&["brsc", &path("path.cx")]).0, 1);
}

#[test]
fn trivial_complex_has_one_flat() {
    let (code, out) = run(&["flats", &path("trivial.cx"), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["flats"], serde_json::json!([["v"]]));
}

#[test]
fn flats_and_closure() {
    let cx = path("four_vertex.cx");
    let (code, out) = run(&["flats", &cx, "--oracle"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("flats: 7\n"));
    let (_, dot) = run(&["flats", &cx, "--dot"]);
    assert_eq!(dot.matches(" -> ").count(), 9);
    let (code, out) = run(&["closure", &cx, "--set", "1,3", "--oracle"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("closure: {1,2,3,4}\n"));
    let (_, out) = run(&["closure", &cx, "--set", "1 2"]);
    assert!(out.contains("flat: true"));
    assert_eq!(run(&["closure", &cx, "--set", "9"]).0, 2);
}

#[test]
fn classify_reports_pentagon() {
    let (code, out) = run(&["classify", &path("six_element.lat"), "--format", "json", "--oracle"]);
    assert_eq!(code, 0);
    let r: ClassifyReport = serde_json::from_str(&out).unwrap();
    assert!(r.atomistic && !r.semimodular && !r.boolean);
    assert_eq!(r.height, 3);
    assert_eq!(r.pentagon.map(|p| p.len()), Some(5));
}

#[test]
fn chain_is_not_atomistic() {
    let lat = path("chain3.lat");
    let (code, out) = run(&["realizable", &lat, "--format", "json"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("{\n  \"atomistic\": false,\n  \"realizable\": false,"));
    assert_eq!(run(&["tl", &lat]).0, 2);
    assert_eq!(run(&["realizable", &lat, "--method", "height3"]).0, 2);
}

#[test]
fn construction_verifies() {
    for name in ["chain3.lat", "six_element.lat"] {
        let (code, out) = run(&["construct", &path(name), "--verify"]);
        assert_eq!(code, 0, "{name}");
        assert!(out.starts_with("complex\n"));
    }
    assert_eq!(run(&["construct", &path("chain3.lat"), "--oracle"]).0, 0);
}

#[test]
fn canonical_complex_and_matrix() {
    let lat = path("six_element.lat");
    let (code, out) = run(&["tl", &lat, "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(out, "complex\nformat 1\nvertices 1 2 3\nfacet 1 2 3\n");
    let (code, out) = run(&["matrix", &lat, "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(out, "111\n011\n101\n110\n001\n000\n");
    let (_, dot) = run(&["hasse", &lat]);
    assert_eq!(dot.matches(" -> ").count(), 7);
}

#[test]
fn supercliques_of_graph_and_lattice() {
    let (code, out) = run(&["superclique", &path("paw.gr"), "--oracle", "--format", "json"]);
    assert_eq!(code, 0);
    let r: SupercliqueReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.supercliques, vec![vec!["a", "b", "c"], vec!["c", "d"]]);
    let (_, fast) = run(&["superclique", &path("six_element.lat")]);
    let (_, naive) = run(&["superclique", &path("six_element.lat"), "--naive"]);
    assert_eq!(fast, naive);
    assert_eq!(fast, "supercliques: 2\n  {1,3}\n  {2,3}\n");
    assert_eq!(run(&["superclique", &path("trivial.cx")]).0, 2);
}

#[test]
fn reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_flatlat"))
        .args(["brsc", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(std::fs::read(fixture("four_vertex.cx")).unwrap().as_slice())
        .unwrap();
    assert_eq!(child.wait_with_output().unwrap().status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.lat");
    std::fs::write(&bad, "lattice\nelements a b\nfrobnicate a\n").unwrap();
    let out = flatlat(&["classify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 1"));

    let not_lattice = dir.path().join("v.lat");
    std::fs::write(&not_lattice, "lattice\nelements B a b\ncover B a\ncover B b\n").unwrap();
    assert_eq!(run(&["classify", not_lattice.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["classify", "/nonexistent/file"]).0, 2);
    assert_eq!(run(&["brsc", &path("six_element.lat")]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn limits_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let big = dir.path().join("big.cx");
    let labels: Vec<String> = (0..25).map(|i| format!("v{i}")).collect();
    std::fs::write(&big, format!("complex\nvertices {}\nfacet v0 v1\n", labels.join(" "))).unwrap();
    let big = big.to_str().unwrap();
    assert_eq!(run(&["flats", big]).0, 3);
    let lifted = Command::new(env!("CARGO_BIN_EXE_flatlat"))
        .args(["brsc", big])
        .env("FLATLAT_LIMIT_OVERRIDE", "1")
        .output()
        .unwrap();
    assert_eq!(lifted.status.code(), Some(0));

    let graph = dir.path().join("big.gr");
    let labels: Vec<String> = (0..17).map(|i| format!("g{i}")).collect();
    std::fs::write(&graph, format!("graph\nvertices {}\n", labels.join(" "))).unwrap();
    assert_eq!(run(&["superclique", graph.to_str().unwrap(), "--naive"]).0, 3);
}
