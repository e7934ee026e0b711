//! Plain-text graph documents.
//!
//! ```text
//! # a twisted loop
//! vertex v: a1 a2
//! edge e1: a1 a2 -
//! marked: e1
//! order: e1
//! ```
//!
//! One record per line and `#` starts a comment. A vertex line lists its
//! half-edges in rotation order, an edge line pairs two half-edges and gives
//! the twist. `marked:` (default: every edge) selects the edges of the
//! embedded graph inside the cellulation; `order:` (default: declaration
//! order) lists every edge once, lowest first.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use qp_core::{EdgeOrder, EdgeSet, EmbeddedGraph, RibbonGraph, Sign, MAX_EDGES};
use thiserror::Error;

/// A parsed document: the embedded graph and the edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: EmbeddedGraph,
    pub order: EdgeOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected `vertex`, `edge`, `marked:` or `order:`")]
    UnknownRecord,
    #[error("malformed {0} line")]
    Malformed(&'static str),
    #[error("half-edge `{0}` appears more than once")]
    DuplicateHalfEdge(String),
    #[error("duplicate {0} label `{1}`")]
    DuplicateLabel(&'static str, String),
    #[error("unknown half-edge `{0}`")]
    UnknownHalfEdge(String),
    #[error("half-edge `{0}` is not used by any edge")]
    UnpairedHalfEdge(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("bad sign `{0}` (expected + or -)")]
    BadSign(String),
    #[error("more than one `{0}` line")]
    Repeated(&'static str),
    #[error("order lists {listed} of {total} edges")]
    IncompleteOrder { listed: usize, total: usize },
    #[error("more than {MAX_EDGES} edges")]
    TooManyEdges,
    #[error(transparent)]
    Graph(qp_core::Error),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

struct EdgeLine {
    line: usize,
    label: String,
    ends: [String; 2],
    sign: Sign,
}

/// Parses a document. Records may appear in any order.
pub fn parse(text: &str) -> Result<GraphDocument, ParseError> {
    use ParseErrorKind as K;

    let mut vertices: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut edges: Vec<EdgeLine> = Vec::new();
    let mut marked: Option<(usize, Vec<String>)> = None;
    let mut order: Option<(usize, Vec<String>)> = None;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (head, rest) = content
            .split_once(':')
            .ok_or_else(|| err(line, K::UnknownRecord))?;
        let words: Vec<String> = rest.split_whitespace().map(String::from).collect();
        let mut head_words = head.split_whitespace();
        match (head_words.next(), head_words.next(), head_words.next()) {
            (Some("vertex"), Some(label), None) => {
                vertices.push((line, label.to_string(), words));
            }
            (Some("edge"), Some(label), None) => {
                let [a, b, s] =
                    <[String; 3]>::try_from(words).map_err(|_| err(line, K::Malformed("edge")))?;
                let sign = match s.as_str() {
                    "+" => Sign::Plus,
                    "-" | "−" => Sign::Minus,
                    _ => return Err(err(line, K::BadSign(s))),
                };
                edges.push(EdgeLine {
                    line,
                    label: label.to_string(),
                    ends: [a, b],
                    sign,
                });
            }
            (Some("marked"), None, None) => {
                if marked.replace((line, words)).is_some() {
                    return Err(err(line, K::Repeated("marked")));
                }
            }
            (Some("order"), None, None) => {
                if order.replace((line, words)).is_some() {
                    return Err(err(line, K::Repeated("order")));
                }
            }
            (Some("vertex"), _, _) => return Err(err(line, K::Malformed("vertex"))),
            (Some("edge"), _, _) => return Err(err(line, K::Malformed("edge"))),
            _ => return Err(err(line, K::UnknownRecord)),
        }
    }

    // half-edge -> line of its vertex
    let mut half_edges: BTreeMap<&str, usize> = BTreeMap::new();
    let mut vertex_labels = BTreeSet::new();
    for (line, label, rot) in &vertices {
        if !vertex_labels.insert(label.as_str()) {
            return Err(err(*line, K::DuplicateLabel("vertex", label.clone())));
        }
        for h in rot {
            if half_edges.insert(h, *line).is_some() {
                return Err(err(*line, K::DuplicateHalfEdge(h.clone())));
            }
        }
    }
    if edges.len() > MAX_EDGES {
        return Err(err(edges[MAX_EDGES].line, K::TooManyEdges));
    }
    let mut used = BTreeSet::new();
    let mut edge_index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        if edge_index.insert(&e.label, i).is_some() {
            return Err(err(e.line, K::DuplicateLabel("edge", e.label.clone())));
        }
        for h in &e.ends {
            if !half_edges.contains_key(h.as_str()) {
                return Err(err(e.line, K::UnknownHalfEdge(h.clone())));
            }
            if !used.insert(h.as_str()) {
                return Err(err(e.line, K::DuplicateHalfEdge(h.clone())));
            }
        }
    }
    if let Some((h, &line)) = half_edges.iter().find(|(h, _)| !used.contains(*h)) {
        return Err(err(line, K::UnpairedHalfEdge(h.to_string())));
    }

    let lookup = |line: usize, labels: &[String]| -> Result<Vec<usize>, ParseError> {
        labels
            .iter()
            .map(|l| {
                edge_index
                    .get(l.as_str())
                    .copied()
                    .ok_or_else(|| err(line, K::UnknownEdge(l.clone())))
            })
            .collect()
    };
    let marked_set = match &marked {
        Some((line, labels)) => lookup(*line, labels)?.into_iter().collect(),
        None => EdgeSet::full(edges.len()),
    };
    let order = match &order {
        Some((line, labels)) => {
            let idx = lookup(*line, labels)?;
            let distinct: BTreeSet<_> = idx.iter().collect();
            if idx.len() != edges.len() || distinct.len() != edges.len() {
                return Err(err(
                    *line,
                    K::IncompleteOrder {
                        listed: distinct.len(),
                        total: edges.len(),
                    },
                ));
            }
            EdgeOrder::new(idx).expect("checked to be a permutation")
        }
        None => EdgeOrder::identity(edges.len()),
    };

    let mut b = RibbonGraph::builder();
    for (_, label, rot) in &vertices {
        b = b.vertex(label.clone(), rot.iter().cloned());
    }
    for e in &edges {
        b = b.edge(
            e.label.clone(),
            e.ends[0].clone(),
            e.ends[1].clone(),
            e.sign,
        );
    }
    let g = b.build().map_err(|e| err(0, K::Graph(e)))?;
    let graph = EmbeddedGraph::new(g, marked_set).expect("marked edges were looked up");
    Ok(GraphDocument { graph, order })
}

/// The canonical document. `marked:` is written unless every edge is marked
/// and `order:` unless the order is declaration order.
pub fn serialize(e: &EmbeddedGraph, ord: &EdgeOrder) -> String {
    let g = e.cellulation();
    let mut out = String::new();
    for (label, rot) in g.vertex_records() {
        if rot.is_empty() {
            writeln!(out, "vertex {label}:").unwrap();
        } else {
            writeln!(out, "vertex {label}: {}", rot.join(" ")).unwrap();
        }
    }
    for (label, a, b, sign) in g.edge_records() {
        writeln!(out, "edge {label}: {a} {b} {sign}").unwrap();
    }
    let labels = |it: &mut dyn Iterator<Item = usize>| -> String {
        it.map(|x| format!(" {}", g.edge_label(x))).collect()
    };
    if !e.is_cellular() {
        writeln!(out, "marked:{}", labels(&mut e.marked().iter())).unwrap();
    }
    if *ord != EdgeOrder::identity(g.edge_count()) {
        writeln!(
            out,
            "order:{}",
            labels(&mut ord.lowest_first().iter().copied())
        )
        .unwrap();
    }
    out
}

impl FromStr for GraphDocument {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl fmt::Display for GraphDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(&self.graph, &self.order))
    }
}

impl GraphDocument {
    /// A cellular document in declaration order.
    pub fn cellular(g: RibbonGraph) -> Self {
        let order = EdgeOrder::identity(g.edge_count());
        Self {
            graph: EmbeddedGraph::cellular(g),
            order,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qp_core::fixtures;

    #[test]
    fn spec_examples() {
        let m1 = parse("vertex v: a1 a2\nedge e1: a1 a2 -").unwrap();
        assert_eq!(m1, GraphDocument::cellular(fixtures::m1()));
        let t1 = parse("vertex v: a1 b1 a2 b2\nedge ea: a1 a2 +\nedge eb: b1 b2 +").unwrap();
        assert_eq!(t1, GraphDocument::cellular(fixtures::t1()));
    }

    #[test]
    fn duplicate_half_edge_is_named() {
        let text = "vertex v: a1 a2 b1 b2\nedge e1: a1 a2 +\nedge e2: a1 b2 +\n";
        let e = parse(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::DuplicateHalfEdge("a1".into()));
        assert!(e.to_string().contains("a1"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("vertex v: a b\n\nedge e: a b *", 3, "bad sign"),
            ("vertex v: a b\nedge e: a c +", 2, "unknown half-edge"),
            ("vertex v: a b c\nedge e: a b +", 1, "not used"),
            ("vertex v: a b\nedge e: a b +\nmarked: f", 3, "unknown edge"),
            (
                "vertex v: a b c d\nedge e: a b +\nedge f: c d +\norder: e",
                4,
                "order lists",
            ),
            (
                "vertex v: a b c d\nedge e: a b +\nedge f: c d +\norder: e e",
                4,
                "order lists",
            ),
            ("vertex v: a b\nedge e: a b", 2, "malformed edge"),
            ("vertex v: a b\nvertex v: c d", 2, "duplicate vertex"),
            ("hello", 1, "expected"),
        ];
        for (text, line, needle) in cases {
            let e = parse(text).unwrap_err();
            assert_eq!(e.line, line, "{text}");
            assert!(e.to_string().contains(needle), "{e}");
        }
    }

    #[test]
    fn comments_marked_and_order() {
        let text = "# theta\nvertex u: x1 y1 z1 # top\nvertex w: z2 y2 x2\n\
                    edge e1: x1 x2 +\nedge e2: y1 y2 +\nedge e3: z1 z2 +\n\
                    marked: e3 e1\norder: e2 e3 e1\n";
        let d = parse(text).unwrap();
        assert_eq!(d.graph.marked(), EdgeSet(0b101));
        assert_eq!(d.order.lowest_first(), [1, 2, 0]);
        let back = serialize(&d.graph, &d.order);
        assert!(back.contains("marked: e1 e3\n"));
        assert!(back.contains("order: e2 e3 e1\n"));
        assert_eq!(parse(&back).unwrap(), d);
    }

    #[test]
    fn canonical_round_trip() {
        for (_, g) in fixtures::named() {
            let d = GraphDocument::cellular(g);
            let text = d.to_string();
            assert!(!text.contains("marked:") && !text.contains("order:"));
            let again = parse(&text).unwrap();
            assert_eq!(again, d);
            assert_eq!(again.to_string(), text);
        }
    }

    #[test]
    fn empty_marked_and_isolated_vertices() {
        let d = parse("vertex v:\nvertex w: a b\nedge e: a b -\nmarked:").unwrap();
        assert_eq!(d.graph.marked(), EdgeSet::EMPTY);
        assert_eq!(d.graph.cellulation().vertex_count(), 2);
        let text = d.to_string();
        assert!(text.starts_with("vertex v:\n"));
        assert!(text.ends_with("marked:\n"));
        assert_eq!(parse(&text).unwrap(), d);
    }
}
