//! Acceptance run: prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::Instant;

use qp::{random_graph, Draws};
use qp_core::graph_polys::{bollobas_riordan, brute_force, krushkal, las_vergnas, PolyKind};
use qp_core::identities::{find, Outcome};
use qp_core::{fixtures, EdgeOrder, EdgeSet, EmbeddedGraph, LaurentPoly};

const GRAPHS_PER_TWIST: usize = 200;
const ORDERS: usize = 3;
const SEED: u64 = 0x5eed;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Result<(), String> + 'a>);

struct Case {
    label: String,
    graph: EmbeddedGraph,
    orders: Vec<EdgeOrder>,
}

fn case(label: String, graph: EmbeddedGraph, draws: &mut Draws) -> Case {
    let n = graph.cellulation().edge_count();
    let orders = (0..ORDERS).map(|_| draws.order(n)).collect();
    Case {
        label,
        graph,
        orders,
    }
}

/// Fixtures plus random connected cellulations with `v <= 5`, `e <= 8`.
fn cellular_corpus(draws: &mut Draws) -> Vec<Case> {
    let mut out: Vec<Case> = fixtures::named()
        .into_iter()
        .map(|(name, g)| case(name.to_string(), EmbeddedGraph::cellular(g), draws))
        .collect();
    for twist in [0.0, 0.3] {
        for i in 0..GRAPHS_PER_TWIST {
            let v = 1 + draws.index(5);
            let e = (v - 1).max(1) + draws.index(8 - (v - 1).max(1) + 1);
            let seed = draws.next_u64();
            let g = random_graph(v, e, twist, seed).expect("feasible sizes");
            out.push(case(
                format!("random p={twist} #{i} (seed {seed:#x})"),
                EmbeddedGraph::cellular(g),
                draws,
            ));
        }
    }
    out
}

/// The same cellulations with a random proper subset of edges marked.
fn marked_corpus(cells: &[Case], draws: &mut Draws) -> Vec<Case> {
    cells
        .iter()
        .filter(|c| c.graph.cellulation().edge_count() > 0)
        .map(|c| {
            let g = c.graph.cellulation().clone();
            let all = g.all_edges();
            let mut m = EdgeSet(draws.next_u64()).intersection(all);
            if m == all {
                m = m.without(draws.index(g.edge_count()));
            }
            let label = format!("{} marked {:#b}", c.label, m.0);
            case(
                label,
                EmbeddedGraph::new(g, m).expect("subset of edges"),
                draws,
            )
        })
        .collect()
}

/// Runs the named identities over a corpus; `Skip` counts as failure because
/// each criterion is only applied to corpora it covers.
fn identities(names: &[&str], corpora: &[&[Case]]) -> Result<(), String> {
    for name in names {
        let id = find(name).ok_or_else(|| format!("no identity {name}"))?;
        for c in corpora.iter().flat_map(|c| c.iter()) {
            match id.run(&c.graph, &c.orders) {
                Outcome::Pass => {}
                Outcome::Skip(why) => return Err(format!("{name} skipped on {}: {why}", c.label)),
                Outcome::Fail(what) => return Err(format!("{name} on {}: {what}", c.label)),
            }
        }
    }
    Ok(())
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().expect("valid polynomial")
}

fn closed_forms() -> Result<(), String> {
    let m1 = EmbeddedGraph::cellular(fixtures::m1());
    let t1 = EmbeddedGraph::cellular(fixtures::t1());
    let checks = [
        ("krushkal(M1)", krushkal(&m1), poly("A^(1/2) + B^(1/2)")),
        ("krushkal(T1)", krushkal(&t1), poly("A + B + 2")),
        (
            "bollobas_riordan(T1)",
            bollobas_riordan(t1.cellulation()),
            poly("1 + 2*Y + Y^2*Z^2"),
        ),
        (
            "las_vergnas(M1)",
            las_vergnas(&m1).map_err(|e| e.to_string())?,
            poly("1 + Z"),
        ),
    ];
    for (what, got, want) in checks {
        if got != want {
            return Err(format!("{what} = {got}, expected {want}"));
        }
    }
    // the same values through the subset-sum oracle
    let brute = brute_force(&t1, PolyKind::BollobasRiordan).map_err(|e| e.to_string())?;
    if brute != poly("1 + 2*Y + Y^2*Z^2") {
        return Err(format!("brute-force BR(T1) = {brute}"));
    }
    Ok(())
}

fn qp(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qp"))
        .args(args)
        .output()
        .expect("qp runs")
}

fn fixture_files() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .expect("fixtures directory")
        .map(|e| e.expect("readable entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "graph"))
        .collect();
    files.sort();
    files
}

fn cli() -> Result<(), String> {
    for file in fixture_files() {
        let path = file.to_str().expect("utf-8 path");
        let out = qp(&["check", "-i", path]);
        let text = String::from_utf8_lossy(&out.stdout);
        if !out.status.success() {
            return Err(format!("qp check {path} exited {:?}", out.status.code()));
        }
        let cellular = !text.contains("SKIP");
        if cellular && !text.lines().all(|l| l.starts_with("PASS ")) {
            return Err(format!("qp check {path}:\n{text}"));
        }
        if text.lines().any(|l| l.starts_with("FAIL")) {
            return Err(format!("qp check {path}:\n{text}"));
        }
        // the expansions of the Krushkal and LV polynomials need a cellulation
        let polys: &[&str] = if cellular {
            &["krushkal", "tutte", "br", "lv"]
        } else {
            &["tutte", "br"]
        };
        for p in polys {
            let brute = qp(&["compute", "-i", path, "-p", p, "-m", "brute"]);
            let fast = qp(&["compute", "-i", path, "-p", p, "-m", "quasitree"]);
            if !brute.status.success() || brute.stdout != fast.stdout || brute.status != fast.status
            {
                return Err(format!(
                    "qp compute -p {p} differs between methods on {path}"
                ));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut draws = Draws::new(SEED);
    let cells = cellular_corpus(&mut draws);
    let marked = marked_corpus(&cells, &mut draws);
    let both: &[&[Case]] = &[&cells, &marked];

    let criteria: Vec<Criterion> = vec![
        (
            "Krushkal expansion equals the subset sum",
            Box::new(|| identities(&["krushkal-expansion"], &[&cells])),
        ),
        (
            "BR polynomial, specialization and expansion agree",
            Box::new(|| identities(&["br"], &[&cells])),
        ),
        (
            "LV polynomial, specialization and expansion agree",
            Box::new(|| identities(&["lv"], &[&cells])),
        ),
        (
            "Tutte specialization on cellular and marked corpora",
            Box::new(|| identities(&["tutte"], both)),
        ),
        (
            "duality swaps X,Y and A,B",
            Box::new(|| identities(&["duality"], &[&cells])),
        ),
        (
            "quasi-tree partition and resolution tree",
            Box::new(|| identities(&["quasi-tree-partition"], both)),
        ),
        (
            "activity identities, genus sum and partial duality",
            Box::new(|| {
                identities(
                    &[
                        "activity-identities",
                        "genus-sum",
                        "partial-dual-components",
                        "partial-duality",
                        "surface-invariants",
                    ],
                    both,
                )
            }),
        ),
        (
            "deletion-contraction",
            Box::new(|| identities(&["deletion-contraction", "minor-counts"], both)),
        ),
        ("closed forms", Box::new(closed_forms)),
        ("command-line check and compute", Box::new(cli)),
    ];

    let mut failed = 0;
    for (i, (what, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match run() {
            Ok(()) => println!("PASS criterion {}: {what} ({:.1?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {what}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} cellular and {} marked graphs, {} of {} criteria passed in {:.1?}",
        cells.len(),
        marked.len(),
        criteria.len() - failed,
        criteria.len(),
        started.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
