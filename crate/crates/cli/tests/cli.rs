use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn altermatic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_altermatic"))
        .args(args)
        .env_remove("ALTERMATIC_OUT")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn two_subsets(n: u32, stable: bool) -> String {
    let mut edges = vec![];
    for a in 1..=n {
        for b in a + 1..=n {
            if !stable || (b - a >= 2 && !(a == 1 && b == n)) {
                edges.push(format!("[{a},{b}]"));
            }
        }
    }
    let vertices: Vec<String> = (1..=n).map(|v| v.to_string()).collect();
    format!("{{\"vertices\":[{}],\"edges\":[{}]}}", vertices.join(","), edges.join(","))
}

#[test]
fn alt_examples_through_files() {
    let dir = TempDir::new().unwrap();
    let singletons = write(dir.path(), "single.json", r#"{"vertices":[1,2,3],"edges":[[1],[2],[3]]}"#);
    let k62 = write(dir.path(), "k62.json", &two_subsets(6, false));
    let sg52 = write(dir.path(), "sg52.json", &two_subsets(5, true));
    let order = write(dir.path(), "order.json", "[1,2,3,4,5]");
    for (h, order, expected) in [(&singletons, None, 0), (&k62, None, 2), (&sg52, Some(&order), 3)] {
        let mut args = vec!["alt", "--hypergraph", h.as_str()];
        if let Some(o) = order {
            args.extend(["--order", o.as_str()]);
        }
        for mode in ["exhaustive", "branch-and-bound"] {
            let mut args = args.clone();
            args.extend(["--mode", mode]);
            let out = altermatic(&args);
            assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
            assert_eq!(json_of(&out)["value"], expected, "{h} {mode}");
        }
    }
}

#[test]
fn salt_on_two_stable_subsets() {
    let dir = TempDir::new().unwrap();
    let sg62 = write(dir.path(), "sg62.json", &two_subsets(6, true));
    let out = altermatic(&["salt", "--hypergraph", &sg62]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["value"], 3);
    assert_eq!(v["bound"], 4);
}

#[test]
fn certificates_are_stored_once() {
    let dir = TempDir::new().unwrap();
    let h = write(dir.path(), "h.json", &two_subsets(5, true));
    let store = dir.path().join("store");
    for _ in 0..2 {
        let out = altermatic(&["--out", store.to_str().unwrap(), "alt", "--hypergraph", &h]);
        assert!(out.status.success());
    }
    let certs = fs::read_dir(store.join("certificates")).unwrap().count();
    assert_eq!(certs, 1);
}

#[test]
fn missing_file_is_an_input_error() {
    let out = altermatic(&["alt", "--hypergraph", "/definitely/not/here.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_json_reports_its_line() {
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"vertices\": [1, 2],\n \"edges\": [[1,]]\n}");
    let out = altermatic(&["alt", "--hypergraph", &bad]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn construct_schrijver_has_nine_vertices() {
    let out = altermatic(&["construct", "schrijver", "6", "2"]);
    assert!(out.status.success());
    assert_eq!(json_of(&out)["graph_vertices"], 9);
}

#[test]
fn construct_paper_rep_writes_reusable_files() {
    let dir = TempDir::new().unwrap();
    let out = altermatic(&["--out", dir.path().to_str().unwrap(), "construct", "paper-rep", "sg2", "6"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["hypergraph_vertices"], 12);
    assert_eq!(v["order"].as_array().unwrap().len(), 12);

    let rep = dir.path().join("paper-rep-sg2-6");
    let (h, o) = (rep.join("hypergraph.json"), rep.join("order.json"));
    let out = altermatic(&["alt", "--hypergraph", h.to_str().unwrap(), "--order", o.to_str().unwrap()]);
    assert!(out.status.success());
    let cert = json_of(&out);
    assert_eq!(cert["value"], 8);
    assert_eq!(cert["bound"], 4);

    let out = altermatic(&["chi", "--graph", rep.join("graph.json").to_str().unwrap()]);
    assert_eq!(json_of(&out)["chi"], 4);
}

#[test]
fn unknown_family_is_a_usage_error() {
    let out = altermatic(&["construct", "petersen-ish", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = altermatic(&["construct", "paper-rep", "nope", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_verb_is_a_usage_error() {
    assert_eq!(altermatic(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn hom_exit_codes() {
    let dir = TempDir::new().unwrap();
    let c5 = write(dir.path(), "c5.txt", "p 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let k2 = write(dir.path(), "k2.txt", "p 2\n0 1\n");
    let k3 = write(dir.path(), "k3.txt", "p 3\n0 1\n1 2\n0 2\n");
    assert_eq!(altermatic(&["hom", "--from", &c5, "--to", &k2]).status.code(), Some(1));
    let out = altermatic(&["hom", "--from", &c5, "--to", &k3]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["exists"], true);
}

#[test]
fn multichi_of_five_cycle() {
    let dir = TempDir::new().unwrap();
    let c5 = write(dir.path(), "c5.txt", "p 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = altermatic(&["multichi", "--graph", &c5, "--m", "2"]);
    assert_eq!(json_of(&out)["chi_m"], 5);
    assert_eq!(altermatic(&["multichi", "--graph", &c5, "--m", "2", "--n", "4"]).status.code(), Some(1));
    assert_eq!(altermatic(&["multichi", "--graph", &c5, "--m", "2", "--n", "5"]).status.code(), Some(0));
}

#[test]
fn chi_timeout_exits_three_with_an_interval() {
    let dir = TempDir::new().unwrap();
    let out = altermatic(&["--out", dir.path().to_str().unwrap(), "construct", "kneser", "11", "4"]);
    assert!(out.status.success());
    let g = dir.path().join("kneser-11-4").join("graph.json");
    let out = altermatic(&["--timeout-ms", "50", "chi", "--graph", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let v = json_of(&out);
    assert!(v["chi"].is_null());
    assert!(v["lower"].as_u64().unwrap() <= 5 && v["upper"].as_u64().unwrap() >= 5);
}

#[test]
fn verify_schrijver_tiny_passes() {
    let dir = TempDir::new().unwrap();
    let out = altermatic(&["--out", dir.path().to_str().unwrap(), "verify", "schrijver", "--scale", "tiny"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json_of(&out);
    let ids: Vec<&str> = report["instances"].as_array().unwrap().iter().map(|i| i["id"].as_str().unwrap()).collect();
    assert!(ids.iter().any(|id| id.contains("SG(5,2)")));
    assert!(ids.iter().any(|id| id.contains("SG(6,2)")));
    assert!(dir.path().join("verify-schrijver-tiny.json").exists());
}

#[test]
fn verify_reports_are_reproducible() {
    let run = |threads: &str| {
        let out = altermatic(&["--threads", threads, "--seed", "7", "verify", "gale", "--trials", "2000"]);
        assert!(out.status.success());
        let mut v = json_of(&out);
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn gale_defaults_to_the_salt_dimension() {
    let dir = TempDir::new().unwrap();
    let sg62 = write(dir.path(), "sg62.json", &two_subsets(6, true));
    let out = altermatic(&["gale", "--hypergraph", &sg62, "--trials", "3000", "--hyperplanes", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["sampled"]["m"], 2);
    assert_eq!(v["sampled"]["failure_count"], 0);
    assert_eq!(v["exact"]["violations"], 0);
}
