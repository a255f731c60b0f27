use std::process::{Command, Output};

fn assoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_assoc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_phi_passes_with_counts() {
    let o = assoc(&["verify", "--check", "phi", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("13 = 13"), "{}", stdout(&o));
}

#[test]
fn pentagon_f_vector() {
    let o = assoc(&["fvector", "--model", "k", "--n", "4"]);
    assert_eq!(stdout(&o), "5 5 1\n");
    let o = assoc(&["fvector", "--model", "cp", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "f0,f1,f2\n5,5,1\n");
}

#[test]
fn coordinates_as_csv() {
    let o = assoc(&["coords", "--n", "4", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("tree,x1,x2,x3\n"));
    assert!(text.lines().any(|l| l.ends_with(",1,4,1")));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn dot_exports() {
    let count = |model: &str, n: &str| {
        let text = stdout(&assoc(&["enumerate", "--model", model, "--n", n, "--format", "dot"]));
        let edges = text.matches(" -> ").count();
        let nodes: std::collections::BTreeSet<&str> = text
            .lines()
            .filter(|l| l.contains("rank=same"))
            .flat_map(|l| l.split("; ").skip(1))
            .filter(|s| s.starts_with('"'))
            .collect();
        (nodes.len(), edges)
    };
    assert_eq!(count("k", "3"), (3, 2));
    assert_eq!(count("j", "3"), (13, 18));
    assert_eq!(count("cp", "1"), (3, 2));
}

#[test]
fn poset_json_round_trip() {
    let o = assoc(&["enumerate", "--model", "jprime", "--n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["elements"].as_array().unwrap().len(), 3);
    assert_eq!(doc["covers"].as_array().unwrap().len(), 2);
    assert_eq!(doc["elements"][0]["rank"], 0);
}

#[test]
fn maps_across_bijections() {
    let text = |args: &[&str]| stdout(&assoc(args)).trim_end().to_string();
    assert_eq!(text(&["map", "--via", "phi", "--element", "(t * * *)"]), "f(a1.a2.a3)");
    assert_eq!(text(&["map", "--via", "phiprime", "--element", "f(a1)f(a2)"]), "a1(a2a3)");
    assert_eq!(text(&["map", "--via", "tubing", "--n", "3", "--element", "{r2}"]), "f(a1.(a2a3).a4)");
    assert_eq!(
        text(&["map", "--via", "composed", "--n", "1", "--element", "{s1}", "--format", "json"]),
        r#"{"input":{"n":1,"tubes":[{"kind":"square","nodes":[1]}]},"output":{"n":3,"brackets":[[2,3]]}}"#
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(assoc(&["fvector", "--model", "j", "--n", "6"]).status.code(), Some(2));
    assert_eq!(assoc(&["verify", "--check", "bogus", "--n", "3"]).status.code(), Some(2));
    assert_eq!(assoc(&["enumerate", "--model", "nope", "--n", "3"]).status.code(), Some(2));
    assert_eq!(assoc(&["map", "--via", "tubing", "--element", "{r1}"]).status.code(), Some(2));
    assert_eq!(assoc(&["map", "--via", "phi", "--element", "(q * *)"]).status.code(), Some(2));
}

#[test]
fn cap_override_warns() {
    let o = assoc(&["fvector", "--model", "j", "--n", "6", "--allow-large"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn output_file_and_unwritable_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.dot");
    let o = assoc(&["enumerate", "--model", "k", "--n", "4", "--format", "dot", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("digraph \"k4\""));
    let bad = dir.path().join("missing").join("x.dot");
    let o = assoc(&["enumerate", "--model", "k", "--n", "4", "--output", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--model", "cp", "--n", "3", "--format", "dot"];
    assert_eq!(assoc(&args).stdout, assoc(&args).stdout);
}

#[test]
fn verify_json_report() {
    let o = assoc(&["verify", "--check", "composed", "--n", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["reports"][0]["counts"]["domain"], 11);
}
