//! The `urm` binary: exit codes, files and reports.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;
use tempfile::TempDir;
use urm::graph::{line_graph, parse_graph, write_graph, Graph};
use urm::report::REPORT_SCHEMA;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn urm(args: &[&str]) -> Run {
    urm_env(args, &[])
}

fn urm_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_urm"));
    cmd.args(args).env_remove("URM_JOBS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn report(r: &Run) -> Value {
    let v: Value = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{e}: {}", r.stdout));
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{v}");
    v
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn graph_file(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    file(dir, name, &write_graph(g))
}

#[test]
fn verify_exit_codes() {
    let d = TempDir::new().unwrap();
    let c4 = graph_file(&d, "c4.gr", &Graph::cycle(4));
    let p4 = graph_file(&d, "p4.gr", &Graph::path(4));
    let m = file(&d, "m.txt", "0 1\n2 3\n");
    let r = urm(&["verify", s(&c4), s(&m)]);
    assert_eq!(r.code, 1);
    let v = report(&r);
    assert_eq!(v["result"]["verdict"], "no");
    assert_eq!(v["result"]["cycle"].as_array().unwrap().len(), 4);
    let r = urm(&["verify", s(&p4), s(&m)]);
    assert_eq!(r.code, 0);
    assert_eq!(report(&r)["result"]["witness"], serde_json::json!([[0, 1], [2, 3]]));
    let bad = file(&d, "bad.gr", "p urm 3 1\n0 7\n");
    let r = urm(&["verify", s(&bad), s(&m)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
    let not_edge = file(&d, "m2.txt", "0 2\n");
    assert_eq!(urm(&["verify", s(&p4), s(&not_edge)]).code, 2);
}

#[test]
fn solve_algorithms() {
    let d = TempDir::new().unwrap();
    let p4 = graph_file(&d, "p4.gr", &Graph::path(4));
    for algo in ["brute", "bb", "treewidth"] {
        let r = urm(&["solve", s(&p4), "--algo", algo]);
        assert_eq!(r.code, 0, "{algo}: {}", r.stderr);
        let v = report(&r);
        assert_eq!(v["result"]["size"], 2);
        assert_eq!(v["result"]["optimal"], true);
        assert_eq!(v["algorithm"], algo);
    }
    let r = urm(&["solve", s(&p4), "--algo", "bb", "--budget", "0s"]);
    assert_eq!(report(&r)["result"]["optimal"], false);
}

#[test]
fn solve_with_external_decomposition() {
    let d = TempDir::new().unwrap();
    let c4 = graph_file(&d, "c4.gr", &Graph::cycle(4));
    let td = file(&d, "c4.td", "s td 2 3 4\nb 1 0 1 2\nb 2 0 2 3\n1 2\n");
    let r = urm(&["solve", s(&c4), "--algo", "treewidth", "--td", s(&td)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(report(&r)["result"]["size"], 1);
    let broken = file(&d, "bad.td", "s td 1 2 4\nb 1 0 1\n");
    let r = urm(&["solve", s(&c4), "--algo", "treewidth", "--td", s(&broken)]);
    assert_eq!(r.code, 2);
}

#[test]
fn solve_line_graph() {
    let d = TempDir::new().unwrap();
    let p5 = graph_file(&d, "p5.gr", &Graph::path(5));
    let r = urm(&["solve", s(&p5), "--algo", "linegraph", "--root", "--l", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = report(&r);
    assert_eq!(v["result"]["verdict"], "yes");
    assert_eq!(v["seed"], 0);
    assert_eq!(urm(&["solve", s(&p5), "--algo", "linegraph", "--root", "--l", "3"]).code, 1);

    // A line graph given directly: the witness is in its own vertex ids.
    let h = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]).unwrap();
    let lg = line_graph(&h).graph;
    let g = graph_file(&d, "lg.gr", &lg);
    let r = urm(&["solve", s(&g), "--algo", "linegraph", "--l", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = report(&r);
    let text = std::fs::read_to_string(&g).unwrap();
    let back = parse_graph(&text).unwrap();
    for e in v["result"]["witness"].as_array().unwrap() {
        assert!(back.has_edge(e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize));
    }

    let claw = graph_file(&d, "claw.gr", &Graph::star(3));
    let r = urm(&["solve", s(&claw), "--algo", "linegraph", "--l", "1"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not a line graph"), "{}", r.stderr);
    assert_eq!(urm(&["solve", s(&p5), "--algo", "linegraph"]).code, 2);
}

#[test]
fn gen_gadget_files() {
    let d = TempDir::new().unwrap();
    let input = file(&d, "one.json", r#"{"n": 3, "instances": [[[1, 2, 3]]]}"#);
    let out = d.path().join("g");
    let r = urm(&["gen", "gadget", s(&input), "--out", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    report(&r);
    let g = parse_graph(&std::fs::read_to_string(out.with_extension("gr")).unwrap()).unwrap();
    assert_eq!(g.vertex_count(), 28);
    let meta: Value = serde_json::from_str(&std::fs::read_to_string(out.with_extension("json")).unwrap()).unwrap();
    assert_eq!(meta["ell"], 13);
    assert_eq!(meta["roles"].as_array().unwrap().len(), 28);
    assert_eq!(meta["edge_types"].as_array().unwrap().len(), g.edge_count());

    let dup = file(&d, "dup.json", r#"{"n": 3, "instances": [[[1, 2, 3]], [[3, 2, 1]]]}"#);
    assert_eq!(urm(&["gen", "gadget", s(&dup), "--out", s(&out)]).code, 2);
    let junk = file(&d, "junk.json", r#"{"n": 3, "instances": "nope"}"#);
    assert_eq!(urm(&["gen", "gadget", s(&junk), "--out", s(&out)]).code, 2);
}

#[test]
fn gen_random_is_reproducible() {
    let d = TempDir::new().unwrap();
    let a = d.path().join("a.gr");
    let b = d.path().join("b.gr");
    for p in [&a, &b] {
        let r = urm(&["gen", "random", "--n", "10", "--p", "0.3", "--seed", "7", "--out", s(p)]);
        assert_eq!(r.code, 0, "{}", r.stderr);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(urm(&["gen", "random", "--n", "10", "--p", "1.5", "--out", s(&a)]).code, 2);
}

#[test]
fn forest_dump() {
    let r = urm(&["forests", "--l", "1"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["forests"].as_array().unwrap().len(), 1);
    let r = urm(&["forests", "--l", "2"]);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let forests = v["forests"].as_array().unwrap();
    let shapes: Vec<Graph> = forests
        .iter()
        .map(|f| {
            let n = f["vertices"].as_u64().unwrap() as usize;
            let edges: Vec<(usize, usize)> = serde_json::from_value(f["edges"].clone()).unwrap();
            assert_eq!(edges.len(), 4);
            Graph::new(n, edges).unwrap()
        })
        .collect();
    use urm::graph::enumerate::are_isomorphic;
    assert!(shapes.iter().any(|g| are_isomorphic(g, &Graph::path(5))));
    assert!(!shapes.iter().any(|g| are_isomorphic(g, &Graph::star(4))));
    assert_eq!(urm(&["forests", "--l", "9"]).code, 2);
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let d = TempDir::new().unwrap();
    let g = graph_file(&d, "g.gr", &Graph::path(7));
    let args = ["solve", s(&g), "--algo", "linegraph", "--root", "--l", "2", "--seed", "11"];
    let mut a = report(&urm_env(&args, &[("URM_JOBS", "3")]));
    let mut b = report(&urm_env(&args, &[("URM_JOBS", "3")]));
    assert_eq!(a["jobs"], 3);
    a["timing"] = Value::Null;
    b["timing"] = Value::Null;
    assert_eq!(a, b);
    let c = report(&urm(&["--jobs", "1", "solve", s(&g), "--algo", "linegraph", "--root", "--l", "2", "--seed", "11"]));
    assert_eq!(c["jobs"], 1);
    assert_eq!(c["result"], a["result"]);
}
