use std::path::PathBuf;
use std::process::{Command, Output};

use qp::parse;
use qp_core::{fixtures, EmbeddedGraph, RibbonGraph};

fn qp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qp"))
        .args(args)
        .output()
        .unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name]
        .iter()
        .collect();
    p.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn fixture_files_match_library_fixtures() {
    for (name, g) in fixtures::named() {
        let text = std::fs::read_to_string(fixture(&format!("{name}.graph"))).unwrap();
        let doc = parse(&text).unwrap();
        assert!(doc.graph.cellulation().is_equivalent(&g), "{name}");
        assert!(doc.graph.is_cellular());
    }
}

#[test]
fn compute_closed_forms() {
    let out = qp(&["compute", "-i", &fixture("T1.graph"), "-p", "krushkal"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "A + B + 2\n");
    let out = qp(&[
        "compute",
        "-i",
        &fixture("M1.graph"),
        "-p",
        "lv",
        "-m",
        "quasitree",
    ]);
    assert_eq!(stdout(&out), "Z + 1\n");
}

#[test]
fn quasitrees_listing() {
    let out = qp(&["quasitrees", "-i", &fixture("T1.graph")]);
    assert_eq!(
        stdout(&out),
        "{} DI: | I_o: | I_n: | DE: eb | E_o: ea | E_n:\n\
         {ea eb} DI: eb | I_o: ea | I_n: | DE: | E_o: | E_n:\n"
    );
}

#[test]
fn dual_twice_is_the_original() {
    let path = fixture("k4_twisted.graph");
    let once = qp(&["dual", "-i", &path, "-H", "ab,cd"]);
    assert!(once.status.success());
    let dir = std::env::temp_dir().join(format!("qp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let tmp = dir.join("dual.graph");
    std::fs::write(&tmp, &once.stdout).unwrap();
    let twice = qp(&["dual", "-i", tmp.to_str().unwrap(), "-H", "ab,cd"]);
    let original = parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let back = parse(&stdout(&twice)).unwrap();
    assert!(back
        .graph
        .cellulation()
        .is_equivalent(original.graph.cellulation()));
    assert_eq!(back.order, original.order);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn random_is_reproducible_and_parses() {
    let args = ["random", "-v", "4", "-e", "7", "-t", "0.3", "-s", "42"];
    let a = qp(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, qp(&args).stdout);
    let doc = parse(&stdout(&a)).unwrap();
    let g: &RibbonGraph = doc.graph.cellulation();
    assert_eq!((g.vertex_count(), g.edge_count()), (4, 7));
    assert_eq!(doc.graph, EmbeddedGraph::cellular(g.clone()));
}

#[test]
fn exit_codes() {
    // parse errors, unreadable files and bad arguments
    assert_eq!(
        qp(&["check", "-i", "/nonexistent.graph"]).status.code(),
        Some(1)
    );
    assert_eq!(
        qp(&["compute", "-i", &fixture("T1.graph"), "-p", "jones"])
            .status
            .code(),
        Some(1)
    );
    let dir = std::env::temp_dir().join(format!("qp-exit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.graph");
    std::fs::write(&bad, "vertex v: a1 a2\nedge e1: a1 a3 +\n").unwrap();
    let out = qp(&["check", "-i", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    std::fs::remove_dir_all(dir).unwrap();

    // input the method cannot handle
    let marked = fixture("theta_marked.graph");
    assert_eq!(
        qp(&["compute", "-i", &marked, "-p", "lv"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qp(&[
            "compute",
            "-i",
            &marked,
            "-p",
            "krushkal",
            "-m",
            "quasitree"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(qp(&["random", "-v", "5", "-e", "2"]).status.code(), Some(2));
    assert_eq!(
        qp(&["dual", "-i", &marked, "-H", "nope"]).status.code(),
        Some(2)
    );

    assert_eq!(qp(&["check", "-i", &marked]).status.code(), Some(0));
    assert_eq!(qp(&["--help"]).status.code(), Some(0));
}
