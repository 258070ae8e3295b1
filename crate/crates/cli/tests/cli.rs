use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ultrafree"));
    c.env_remove("ULTRAFREE_BUDGET_MS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

const C5: &str = r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]}"#;

#[test]
fn chromatic_number_of_pentagon() {
    let f = scratch("c5.json", C5);
    let out = run(&["analyze", f.to_str().unwrap(), "--metrics", "chi", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out), json!({"chi": 3}));
}

#[test]
fn dimacs_input_is_accepted() {
    let f = scratch("p3.col", "c path\np edge 3 2\ne 1 2\ne 2 3\n");
    let out = run(&["analyze", f.to_str().unwrap(), "--metrics", "chi,omega", "--json"]);
    assert_eq!(stdout_json(&out), json!({"chi": 2, "omega": 2}));
}

#[test]
fn bad_input_exits_with_usage_code() {
    let f = scratch("loop.col", "e 1 1\n");
    let out = run(&["analyze", f.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_json(&out)["error"]["kind"], "self-loop-rejected");

    let f = scratch("garbage.col", "p edge 3 1\ne 1 x\n");
    assert_eq!(run(&["analyze", f.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/graph.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_3() {
    let out = bin()
        .args(["--budget-nodes", "1", "--json", "gen", "hypercube_lb", "--params", "d=3"])
        .output()
        .unwrap();
    let f = scratch("g3-budget.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = run(&["--budget-nodes", "1", "--json", "analyze", f.to_str().unwrap(), "--metrics", "chi"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["error"]["kind"], "budget-exceeded");
}

#[test]
fn generated_graphs_round_trip() {
    for (family, params, ext) in [("turan", "n=7 parts=3", "json"), ("kneser", "m=5 k=2", "col"), ("mtt", "t=4", "col"), ("gamma_blowup", "gamma=C5 a=1 b=2", "json")] {
        let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!("{family}.{ext}"));
        let mut args = vec!["gen", family, "--out", path.to_str().unwrap(), "--params"];
        args.extend(params.split(' '));
        assert_eq!(run(&args).status.code(), Some(0), "{family}");
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = ultrafree::io::parse_graph(&text).unwrap();
        let mut direct = vec!["gen", family, "--params"];
        direct.extend(params.split(' '));
        let out = run(&[&["--json"], &direct[..]].concat());
        assert_eq!(ultrafree::io::graph_from_value(&stdout_json(&out)).unwrap(), parsed, "{family}");
    }
}

#[test]
fn decomposition_of_cube_construction() {
    let out = run(&["--json", "gen", "hypercube_lb", "--params", "d=3"]);
    let f = scratch("g3.json", std::str::from_utf8(&out.stdout).unwrap());
    let out = run(&["decompose", f.to_str().unwrap(), "--r", "3", "--eps", "1/28", "--method", "haussler", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = stdout_json(&out);
    let g = ultrafree::io::parse_graph(&std::fs::read_to_string(&f).unwrap()).unwrap();
    let d = ultrafree::io::decomposition_from_value(&doc, &g).unwrap();
    assert!(d.quotient.is_maximal_k_free(3));
    assert!(doc["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));

    let out = run(&["decompose", f.to_str().unwrap(), "--method", "twin", "--json"]);
    assert_eq!(stdout_json(&out)["quotient"]["n"], 14);
}

#[test]
fn table1_suite_passes_and_is_byte_stable() {
    let a = run(&["--json", "verify", "--suite", "table1", "--catalog", "small"]);
    assert_eq!(a.status.code(), Some(0));
    let b = run(&["--json", "verify", "--suite", "table1", "--catalog", "small"]);
    assert_eq!(a.stdout, b.stdout);
    let report = stdout_json(&a);
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    assert!(names.contains(&"chi_eq_tau") && names.contains(&"k5_free_iff_5_2_property"));
}

#[test]
fn other_suites_pass() {
    for suite in ["halfgraph", "construction:d=3", "mindeg-ultra", "codeg-edge", "vc-chromatic"] {
        let out = run(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn set_system_and_space_commands() {
    let f = scratch("c5-setsys.json", C5);
    let out = run(&["--json", "setsys", f.to_str().unwrap(), "--derive", "bg", "--metrics", "tau,nu,taustar,helly"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["tau"]["value"], 3);
    assert_eq!(doc["nu"]["value"], 2);
    assert_eq!(doc["taustar"]["value"], "5/2");
    assert_eq!(doc["helly"], 2);

    let s = scratch("cube.json", r#"{"kind":"subcube","n":3}"#);
    let out = run(&["--json", "space", s.to_str().unwrap(), "--radon-cap", "8"]);
    let doc = stdout_json(&out);
    assert_eq!(doc["radon"], 3);
    assert_eq!(doc["helly"], 2);

    let out = run(&["--json", "space", f.to_str().unwrap(), "--weak-net", "0.3"]);
    assert_eq!(out.status.code(), Some(2));
}
