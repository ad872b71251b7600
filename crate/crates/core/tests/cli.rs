use std::path::{Path, PathBuf};
use std::process::Command;

use prext::detect::is_meyniel;
use prext::io;
use prext::Graph;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn prext(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_prext")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

struct Files {
    _dir: tempfile::TempDir,
    c5: String,
    k4: String,
    house: String,
    c4: String,
    q13: String,
    q_house_chord: String,
    empty: String,
    bad: String,
}

fn files() -> Files {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    Files {
        c5: write(d, "c5.col", "c pentagon\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n"),
        k4: write(d, "k4.col", "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n"),
        house: write(d, "house.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n"),
        c4: write(d, "c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n"),
        q13: write(d, "q13.txt", "q 1: 0\nq 2: 2\n"),
        q_house_chord: write(d, "qh.txt", "# chord endpoints\nq 1: 0\nq 2: 2\n"),
        empty: write(d, "empty.txt", ""),
        bad: write(d, "bad.txt", "q 1: 0 1\n"),
        _dir: dir,
    }
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn classify_reports_flags_and_external_labels() {
    let f = files();
    let r = prext(&["classify", &f.c5, "--format", "json"]);
    assert_eq!(r.code, 0);
    let v = json(&r.stdout);
    for flag in ["is_meyniel", "is_artemis", "is_berge", "is_co_meyniel"] {
        assert_eq!(v[flag], false, "{flag}");
    }
    assert_eq!(v["meyniel_witness"]["kind"], "OddHole");
    assert_eq!(v["meyniel_witness"]["vertices"], serde_json::json!([1, 2, 3, 4, 5]));

    let v = json(&prext(&["classify", &f.k4, "--format", "json"]).stdout);
    for flag in ["is_meyniel", "is_artemis", "is_berge", "is_co_meyniel"] {
        assert_eq!(v[flag], true, "{flag}");
    }

    let v = json(&prext(&["classify", &f.house, "--format", "json"]).stdout);
    assert_eq!(v["is_meyniel"], false);
    assert_eq!(v["meyniel_witness"]["kind"], "House");

    let text = prext(&["classify", &f.c5]).stdout;
    assert!(text.contains("OddHole [1, 2, 3, 4, 5]"), "{text}");
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.col", "p edge 3 1\ne 1 2\ne 1 x\n");
    let r = prext(&["classify", &bad]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 3"), "{}", r.stderr);
    assert_eq!(prext(&["classify", "/nonexistent/graph.col"]).code, 2);
}

#[test]
fn prext_optimizes_and_decides() {
    let f = files();
    let r = prext(&["prext", &f.c4, &f.q13, "--format", "json"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout.split_whitespace().collect::<String>(),
        r#"{"feasible":true,"colors_used":3,"assignment":[[0,1],[1,3],[2,2],[3,3]],"contracted_size":4}"#
    );

    let r = prext(&["prext", &f.c4, &f.q13, "-k", "2", "--format", "json"]);
    assert_eq!(r.code, 1);
    assert_eq!(json(&r.stdout)["feasible"], false);

    let r = prext(&["prext", &f.c4, &f.q13, "-k", "3"]);
    assert_eq!(r.code, 0);

    // Empty family: plain chromatic number.
    let v = json(&prext(&["prext", &f.c5, &f.empty, "--format", "json"]).stdout);
    assert_eq!(v["colors_used"], 3);
}

#[test]
fn prext_rejects_bad_families_and_warns_outside_the_class() {
    let f = files();
    let r = prext(&["prext", &f.c4, &f.bad]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("class 1"), "{}", r.stderr);

    // C5 is its own complement's class neither way: warn but answer.
    let r = prext(&["prext", &f.c5, &f.empty]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("warning"), "{}", r.stderr);

    // With --co the classes must be cliques: {0, 1} is an edge of C4.
    let r = prext(&["prext", &f.c4, &f.bad, "--co", "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    // Minimum clique cover of C4 containing the edge {0,1}: two edges.
    assert_eq!(json(&r.stdout)["colors_used"], 2);
    let r = prext(&["prext", &f.c4, &f.q13, "--co"]);
    assert_eq!(r.code, 0);
}

fn parse_dimacs_output(s: &str) -> Graph {
    io::parse_dimacs(s).unwrap().graph
}

#[test]
fn contract_emits_dimacs_with_origins() {
    let f = files();
    let r = prext(&["contract", &f.house, &f.q_house_chord, "--co"]);
    assert_eq!(r.code, 0);
    let g = parse_dimacs_output(&r.stdout);
    assert_eq!(g.n(), 5);
    assert!(g.vertices().iter().all(|v| g.degree(v) == 2));
    assert!(g.is_connected(g.vertices()));
    assert!(r.stdout.contains("c origin 4 class 1 members 0"));

    let r = prext(&["contract", &f.c4, &f.q13]);
    let g = parse_dimacs_output(&r.stdout);
    assert_eq!((g.n(), g.edge_count()), (4, 5));

    let r = prext(&["contract", &f.c4, &f.empty]);
    assert_eq!(parse_dimacs_output(&r.stdout), Graph::cycle(4).unwrap());

    assert_eq!(prext(&["contract", &f.c4, &f.bad]).code, 2);
}

#[test]
fn verify_commands_pass() {
    let r = prext(&["verify", "theorem1", "--nmax", "5"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("result: pass"));

    let r = prext(&["verify", "lemma1", "--nmax", "4", "--format", "json"]);
    assert_eq!(r.code, 0);
    assert_eq!(json(&r.stdout)["pass"], true);

    let r = prext(&["verify", "closure", "--nmax", "5", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v = json(&r.stdout);
    assert!(v["certificates"][0]["claim"].as_str().unwrap().contains("prism"));
    assert_eq!(v["certificates"][0]["holds"], true);
}

#[test]
fn verify_guards_and_seeds() {
    assert_eq!(prext(&["verify", "theorem1", "--nmax", "7"]).code, 3);
    assert_eq!(prext(&["verify", "lemma1", "--nmax", "6"]).code, 3);
    let r = prext(&["verify", "lemmas", "--nmax", "7", "--samples", "3"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("--seed"));
}

#[test]
fn identical_runs_give_identical_json() {
    let args = ["verify", "theorem2", "--nmax", "7", "--samples", "5", "--seed", "11", "--format", "json"];
    let a = prext(&args);
    let b = prext(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a.stdout);
    assert_eq!(v["scope"]["sampled"]["seed"], 11);
    assert_eq!(v["scope"]["sampled"]["obtained"], 5);
}

#[test]
fn gen_streams_are_deterministic_and_in_class() {
    let r = prext(&["gen", "meyniel", "8", "5", "--seed", "7"]);
    assert_eq!(r.code, 0);
    let graphs = io::parse_edge_list_stream(&r.stdout).unwrap();
    assert_eq!(graphs.len(), 5);
    assert!(graphs.iter().all(|g| g.n() == 8 && is_meyniel(g).0));
    assert_eq!(prext(&["gen", "meyniel", "8", "5", "--seed", "7"]).stdout, r.stdout);

    let r = prext(&["gen", "any", "4", "1", "--seed", "1"]);
    assert_eq!(io::parse_edge_list_stream(&r.stdout).unwrap().len(), 1);

    let r = prext(&["gen", "co-meyniel", "6", "3", "--seed", "2"]);
    let graphs = io::parse_edge_list_stream(&r.stdout).unwrap();
    assert_eq!(graphs.len(), 3);
    assert!(graphs.iter().all(|g| is_meyniel(&g.complement()).0));

    assert_eq!(prext(&["gen", "any", "4", "1"]).code, 2, "seed is mandatory");
}

#[test]
fn out_flag_and_resource_guards() {
    let f = files();
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let r = prext(&["classify", &f.k4, "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let v = json(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(v["is_berge"], true);

    assert_eq!(prext(&["classify", &f.c5, "--max-vertices", "4"]).code, 3);

    // Groetzsch graph: chromatic number 4 needs more than one search node.
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::from("11\n");
    for (u, v) in [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (5, 1), (5, 4), (6, 0), (6, 2), (7, 1), (7, 3), (8, 2), (8, 4), (9, 3), (9, 0),
        (10, 5), (10, 6), (10, 7), (10, 8), (10, 9),
    ] {
        text.push_str(&format!("{u} {v}\n"));
    }
    let g = write(dir.path(), "g.txt", &text);
    let empty = write(dir.path(), "e.txt", "");
    let r = prext(&["prext", &g, &empty, "--node-budget", "1"]);
    assert_eq!(r.code, 3, "{}", r.stderr);
    let r = prext(&["prext", &g, &empty, "--format", "json"]);
    assert_eq!(json(&r.stdout)["colors_used"], 4);
}
