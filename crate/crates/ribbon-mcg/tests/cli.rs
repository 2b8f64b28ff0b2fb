//! End-to-end runs of the binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ribbon-mcg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn graph_subcommands_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.json");
    let f = file.to_str().unwrap();
    let out = run(&["graph", "new", "--genus", "2", "--boundaries", "1", "--out", f]);
    assert!(out.status.success());
    let g = read_json(&file);
    assert_eq!(g["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(g["edges"].as_array().unwrap().len(), 6);

    let genus = json(&run(&["graph", "genus", f]));
    assert_eq!(genus["genus"], 2);
    assert_eq!(genus["faces"], 2);

    let faces = json(&run(&["graph", "faces", f]));
    assert_eq!(faces["count"], 2);

    let std = json(&run(&["graph", "standardize", f]));
    assert_eq!((std["genus"].as_u64(), std["boundaries"].as_u64()), (Some(2), Some(1)));
}

#[test]
fn graph_from_vertex_orders() {
    let torus = json(&run(&["graph", "new", "--order", "st(a) st(b) ta(a) ta(b)"]));
    assert_eq!(torus["edges"].as_array().unwrap().len(), 2);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.json");
    std::fs::write(&file, torus.to_string()).unwrap();
    let faces = json(&run(&["graph", "faces", file.to_str().unwrap()]));
    assert_eq!(faces["count"], 1);
    let std = json(&run(&["graph", "standardize", file.to_str().unwrap()]));
    assert_eq!(std["genus"], 1);
}

#[test]
fn act_symbolic_group_and_linear() {
    let sym = json(&run(&["act", "--genus", "1", "--script", "D_b1"]));
    assert_eq!(sym["images"]["a1"], "b1 a1");
    assert_eq!(sym["images"]["b1"], "b1");

    let grp = json(&run(&["act", "--genus", "1", "--script", "D_b1", "--group", "S3", "--state", "a1=r, b1=s"]));
    assert_eq!(grp["output"]["a1"], "r2s");
    assert_eq!(grp["output"]["b1"], "s");

    let lin = run(&["act", "--genus", "1", "--script", "D_b1", "--instance", "sweedler4", "--state", "a1=1, b1=g"]);
    assert!(lin.status.success(), "{}", String::from_utf8_lossy(&lin.stderr));

    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("s.txt");
    std::fs::write(&script, "# undo a slide\nslide L b1 ta(a1)\nslide -L b1 ta(a1)\n").unwrap();
    let id = json(&run(&["act", "--genus", "1", "--script-file", script.to_str().unwrap()]));
    assert_eq!(id["images"]["a1"], "a1");
}

#[test]
fn verify_suites_exit_zero_and_write_reports() {
    let dir = tempfile::tempdir().unwrap();
    for (suite, extra) in [
        ("hopf", vec![]),
        ("torus", vec!["--instance", "sweedler4"]),
        ("bene", vec![]),
        ("lemmas", vec![]),
        ("gervais", vec!["--genus", "1", "--boundaries", "1"]),
        ("closed", vec!["--genus", "2", "--group", "S3"]),
        ("equivariance", vec!["--genus", "1", "--boundaries", "1", "--group", "S3"]),
    ] {
        let file = dir.path().join(format!("{suite}.json"));
        let mut args = vec!["verify", suite, "--out", file.to_str().unwrap()];
        args.extend(extra);
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&out.stdout));
        let report = read_json(&file);
        let cases = report.as_array().unwrap();
        assert!(!cases.is_empty());
        assert!(cases.iter().all(|c| c["suite"] == suite));
    }
}

#[test]
fn failures_and_preconditions_exit_one() {
    let out = run(&["verify", "closed", "--genus", "1", "--group", "Z3", "--pivot", "g"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.as_array().unwrap().iter().all(|c| c["verdict"] == "precondition"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(run(&["verify", "closed", "--genus", "0"]).status.code(), Some(2));
    assert_eq!(run(&["biinv", "--group", "S3", "--pivot", "r"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "faces", "/nonexistent/graph.json"]).status.code(), Some(2));
    assert_eq!(run(&["act", "--genus", "1", "--script", "D_zz"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn biinvariants_of_the_torus() {
    let b = json(&run(&["biinv", "--group", "Z2"]));
    assert_eq!(b["coinvariants"], 4);
    assert_eq!(b["orbits"], 4);
    let s3 = json(&run(&["biinv", "--group", "S3", "--genus", "2"]));
    assert_eq!(s3["coinvariants"], 486);
    assert_eq!(s3["orbits"], 116);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["graph", "new", "--genus", "2", "--boundaries", "2"][..],
        &["act", "--genus", "2", "--script", "D_{gamma_1_2} D_{delta_1}"][..],
        &["biinv", "--group", "S3", "--genus", "1", "--boundaries", "1"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
    let strip = |out: Output| -> Value {
        let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
        v.as_array_mut().unwrap().iter_mut().for_each(|c| drop(c.as_object_mut().unwrap().remove("millis")));
        v
    };
    let args = ["verify", "gervais", "--genus", "1", "--boundaries", "1"];
    assert_eq!(strip(run(&args)), strip(run(&args)));
}

#[test]
fn groups_load_from_json_tables() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("klein.json");
    let table = r#"{"name": "V4", "elements": ["e", "x", "y", "z"],
        "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#;
    std::fs::write(&file, table).unwrap();
    let b = json(&run(&["biinv", "--group", file.to_str().unwrap()]));
    // Abelian: every pair is flat and every orbit is a singleton.
    assert_eq!(b["coinvariants"], 16);
    assert_eq!(b["orbits"], 16);
    let act = json(&run(&["act", "--genus", "1", "--script", "D_b1", "--group", file.to_str().unwrap(), "--state", "a1=x, b1=y"]));
    assert_eq!(act["output"]["a1"], "z");
    std::fs::write(&file, r#"{"name": "bad", "elements": ["e", "x"], "table": [[0,1],[1,1]]}"#).unwrap();
    assert_eq!(run(&["biinv", "--group", file.to_str().unwrap()]).status.code(), Some(2));
}
