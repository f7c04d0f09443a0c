use std::fs;
use std::path::PathBuf;
use std::process::Command;

use tempfile::TempDir;

struct Run {
    stdout: String,
    code: i32,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_graphgroups"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        code: out.status.code().expect("exit code"),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> String {
    let p: PathBuf = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn value<'a>(r: &'a Run, key: &str) -> &'a str {
    let prefix = format!("{key}: ");
    r.stdout
        .lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no `{key}` in\n{}", r.stdout))
}

fn setup() -> (TempDir, String) {
    let dir = TempDir::new().unwrap();
    let edge = file(&dir, "edge.graph", "n 2\ne 0 1\n");
    (dir, edge)
}

#[test]
fn order_of_adjacent_pair() {
    let (_d, edge) = setup();
    let r = run(&["order", &edge, "g0 g1"]);
    assert_eq!((value(&r, "order"), r.code), ("11", 0));
    let r = run(&["order", &edge, "g0 g1 g1"]);
    assert_eq!(value(&r, "order"), "infinite");
}

#[test]
fn word_problem() {
    let (_d, edge) = setup();
    let r = run(&["wp", &edge, "g0 g0 g0 g0 g0 g0 g0"]);
    assert_eq!((value(&r, "result"), r.code), ("identity", 0));
    let r = run(&["wp", &edge, "g0 g1 G0"]);
    assert_eq!(value(&r, "result"), "nontrivial");
    assert_eq!(value(&r, "normal-form"), "g0 g1 G0");
}

#[test]
fn rado_adjacency() {
    let r = run(&["rado-adj", "4", "9"]);
    assert_eq!((value(&r, "result"), r.code), ("non-adjacent", 1));
    let r = run(&["rado-adj", "2", "5"]);
    assert_eq!((value(&r, "result"), r.code), ("adjacent", 0));
    assert_eq!(run(&["rado-adj", "1", "5"]).code, 2);
}

#[test]
fn relators_and_small_cancellation() {
    let (_d, edge) = setup();
    let r = run(&["relators", &edge]);
    assert_eq!(
        r.stdout.lines().filter(|l| l.starts_with("seed: ")).count(),
        3
    );
    assert_eq!(value(&r, "symmetrized"), "8");
    let r = run(&["check-c16", &edge]);
    assert_eq!(
        (value(&r, "c16"), value(&r, "max-piece"), r.code),
        ("true", "1", 0)
    );
}

#[test]
fn coding_dump_and_star_table() {
    let (_d, edge) = setup();
    let r = run(&["code", &edge, "--max-code", "6"]);
    assert_eq!(
        r.stdout,
        "0: e\n1: g0\n2: G0\n3: g0 g0\n4: g1\n5: G1\n6: g0 g1\n"
    );
    let r = run(&["star-table", &edge, "--max-code", "2"]);
    assert_eq!(r.stdout.lines().next(), Some("n,m,star"));
    assert_eq!(r.stdout.lines().last(), Some("2,2,12"));
}

#[test]
fn single_vertex_group_is_exhausted() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "v.graph", "n 1\n");
    let r = run(&["code", &g, "--max-code", "30"]);
    assert_eq!(r.code, 0);
    assert!(value(&r, "exhausted").contains("7 elements"));
}

#[test]
fn graph_relations() {
    let d = TempDir::new().unwrap();
    let p = file(&d, "p.graph", "n 3\ne 0 1\n");
    let q = file(&d, "q.graph", "n 3\ne 1 2\n");
    let k3 = file(&d, "k3.graph", "n 3\ne 0 1\ne 0 2\ne 1 2\n");
    let edge = file(&d, "edge.graph", "n 2\ne 0 1\n");
    let r = run(&["embed-graph", &edge, &p]);
    assert_eq!(
        (value(&r, "embeds"), value(&r, "map"), r.code),
        ("true", "0 1", 0)
    );
    assert_eq!(run(&["embed-graph", &k3, &p]).code, 1);
    let r = run(&["graph-iso", &p, &q]);
    assert_eq!((value(&r, "isomorphic"), r.code), ("true", 0));
    assert_eq!(run(&["graph-iso", &p, &k3]).code, 1);
    assert_eq!(run(&["rigid", &p]).code, 1);
    assert_eq!(run(&["tree", &p]).code, 1);
    let path = file(&d, "path.graph", "n 3\ne 0 1\ne 1 2\n");
    assert_eq!(value(&run(&["tree", &path]), "tree"), "true");
}

#[test]
fn homomorphism_files() {
    let d = TempDir::new().unwrap();
    let edge = file(&d, "edge.graph", "n 2\ne 0 1\n");
    let empty = file(&d, "empty.graph", "n 2\n");
    let swap = file(&d, "swap.map", "0 g1\n1 g0\n");
    let r = run(&["hom-check", &edge, &edge, &swap]);
    assert_eq!(
        (
            value(&r, "homomorphism"),
            value(&r, "canonical-rho"),
            r.code
        ),
        ("true", "1 0", 0)
    );
    // the image of the edge pair has order 13 in the edgeless group
    assert_eq!(run(&["hom-check", &edge, &empty, &swap]).code, 1);
    let bad = file(&d, "bad.map", "0 g1\n0 g0\n");
    assert_eq!(run(&["hom-check", &edge, &edge, &bad]).code, 2);
}

#[test]
fn automorphism_extension() {
    let (d, edge) = setup();
    let swap = file(&d, "swap.pm", "0 0\n1 4\n");
    let r = run(&["aut-extend", &edge, &swap, "--oracle"]);
    assert_eq!(
        (
            value(&r, "extends"),
            value(&r, "oracle"),
            value(&r, "rho"),
            r.code
        ),
        ("true", "true", "1 0", 0)
    );
    let no = file(&d, "no.pm", "0 0\n1 3\n");
    let r = run(&["aut-extend", &edge, &no, "--oracle"]);
    assert_eq!(
        (value(&r, "extends"), value(&r, "oracle"), r.code),
        ("false", "false", 1)
    );
}

#[test]
fn rado_embedding_lines() {
    let (_d, edge) = setup();
    let r = run(&["rado-embed", &edge]);
    assert_eq!((r.stdout.as_str(), r.code), ("0 2\n1 5\n", 0));
}

#[test]
fn errors_and_budgets() {
    let (d, edge) = setup();
    assert_eq!(run(&["order", &edge, "g5"]).code, 2);
    assert_eq!(run(&["order", &edge, "x1"]).code, 2);
    assert_eq!(run(&["order", "/nonexistent/graph", "g0"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["order", &edge, "g0", "--dehn-budget", "0"]).code, 2);
    let broken = file(&d, "broken.graph", "n 2\ne 1 0\n");
    assert_eq!(run(&["tree", &broken]).code, 2);
    let big = file(&d, "big.graph", "n 9\n");
    assert_eq!(run(&["rigid", &big]).code, 2);
    assert_eq!(run(&["rigid", &big, "--max-n", "9"]).code, 1);
    let long = "g0 g1 ".repeat(30);
    assert_eq!(run(&["wp", &edge, &long, "--dehn-budget", "1"]).code, 3);
}
