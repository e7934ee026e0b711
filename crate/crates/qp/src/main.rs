use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qp::report::{check_lines, quasi_tree_lines};
use qp::{parse, random_graph, serialize, GraphDocument};
use qp_core::graph_polys::{brute_force, PolyKind};
use qp_core::quasitree::expand;
use qp_core::{EdgeOrder, EmbeddedGraph};

/// Exact polynomial invariants of embedded graphs.
#[derive(Parser)]
#[command(name = "qp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial in canonical form.
    Compute {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long, value_parser = parse_kind)]
        poly: PolyKind,
        #[arg(short, long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Run the identity suite and print PASS/FAIL per identity.
    Check {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// List quasi-trees with their activity classes.
    Quasitrees {
        #[arg(short, long)]
        input: PathBuf,
    },
    /// Print the dual, or the partial dual along the given edges.
    Dual {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short = 'H', long = "edges", value_delimiter = ',')]
        edges: Option<Vec<String>>,
    },
    /// Print a random connected ribbon graph.
    Random {
        #[arg(short, long)]
        vertices: usize,
        #[arg(short, long)]
        edges: usize,
        #[arg(short, long, default_value_t = 0.0)]
        twist: f64,
        #[arg(short, long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Quasitree,
}

fn parse_kind(s: &str) -> Result<PolyKind, String> {
    s.parse()
}

/// A message and the exit code that goes with it.
struct Failure(u8, String);

const PARSE: u8 = 1;
const INVALID: u8 = 2;
const CHECK: u8 = 3;

fn load(path: &PathBuf) -> Result<GraphDocument, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure(PARSE, format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure(PARSE, format!("{}: {e}", path.display())))
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure(INVALID, e.to_string())
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Compute {
            input,
            poly,
            method,
        } => {
            let doc = load(&input)?;
            let p = match method {
                Method::Brute => brute_force(&doc.graph, poly),
                Method::Quasitree => expand(&doc.graph, poly, &doc.order),
            }
            .map_err(invalid)?;
            Ok(format!("{p}\n"))
        }
        Command::Check { input } => {
            let doc = load(&input)?;
            let (lines, ok) = check_lines(&doc);
            let text = lines.join("\n") + "\n";
            if ok {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure(CHECK, "identity check failed".into()))
            }
        }
        Command::Quasitrees { input } => {
            let doc = load(&input)?;
            let lines = quasi_tree_lines(&doc).map_err(invalid)?;
            Ok(lines.into_iter().map(|l| l + "\n").collect())
        }
        Command::Dual { input, edges } => {
            let doc = load(&input)?;
            let g = doc.graph.cellulation();
            let h = match &edges {
                Some(labels) => g
                    .edge_set(labels.iter().map(String::as_str))
                    .map_err(invalid)?,
                None => g.all_edges(),
            };
            let d = EmbeddedGraph::new(g.partial_dual(h), doc.graph.marked())
                .expect("partial duals keep the edge set");
            Ok(serialize(&d, &doc.order))
        }
        Command::Random {
            vertices,
            edges,
            twist,
            seed,
        } => {
            let g = random_graph(vertices, edges, twist, seed).map_err(invalid)?;
            Ok(serialize(
                &EmbeddedGraph::cellular(g),
                &EdgeOrder::identity(edges),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure(code, msg)) => {
            eprintln!("qp: {msg}");
            ExitCode::from(code)
        }
    }
}
