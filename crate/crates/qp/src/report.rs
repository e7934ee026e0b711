//! Text renderings used by the command-line tool.

use qp_core::identities::{run_suite, Outcome};
use qp_core::quasitree::{activities, quasi_trees};
use qp_core::{EdgeOrder, EdgeSet, Error, RibbonGraph};

use crate::GraphDocument;

fn labels(g: &RibbonGraph, s: EdgeSet) -> String {
    s.iter()
        .map(|e| g.edge_label(e))
        .collect::<Vec<_>>()
        .join(" ")
}

/// One line per quasi-tree of the cellulation:
/// `{e1 e3} DI: .. | I_o: .. | I_n: .. | DE: .. | E_o: .. | E_n: ..`.
pub fn quasi_tree_lines(doc: &GraphDocument) -> Result<Vec<String>, Error> {
    let g = doc.graph.cellulation();
    quasi_trees(g)?
        .into_iter()
        .map(|q| {
            let a = activities(g, &doc.order, q)?;
            let names = ["DI", "I_o", "I_n", "DE", "E_o", "E_n"];
            let classes: Vec<String> = names
                .iter()
                .zip(a.classes())
                .map(|(n, s)| format!("{n}: {}", labels(g, s)).trim_end().to_string())
                .collect();
            Ok(format!("{{{}}} {}", labels(g, q), classes.join(" | ")))
        })
        .collect()
}

/// The orders `check` uses: the document's own order and its reversal.
pub fn check_orders(doc: &GraphDocument) -> Vec<EdgeOrder> {
    let mut orders = vec![doc.order.clone()];
    let rev = doc.order.reversed();
    if rev != doc.order {
        orders.push(rev);
    }
    orders
}

/// `PASS name`, `SKIP name (why)` or `FAIL name: what` per identity, and
/// whether everything that ran passed.
pub fn check_lines(doc: &GraphDocument) -> (Vec<String>, bool) {
    let results = run_suite(&doc.graph, &check_orders(doc));
    let ok = results.iter().all(|(_, o)| !o.is_fail());
    let lines = results
        .into_iter()
        .map(|(name, outcome)| match outcome {
            Outcome::Pass => format!("PASS {name}"),
            Outcome::Skip(why) => format!("SKIP {name} ({why})"),
            Outcome::Fail(what) => format!("FAIL {name}: {what}"),
        })
        .collect();
    (lines, ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qp_core::fixtures;

    #[test]
    fn t1_quasi_tree_lines() {
        let doc = GraphDocument::cellular(fixtures::t1());
        assert_eq!(
            quasi_tree_lines(&doc).unwrap(),
            [
                "{} DI: | I_o: | I_n: | DE: eb | E_o: ea | E_n:",
                "{ea eb} DI: eb | I_o: ea | I_n: | DE: | E_o: | E_n:",
            ]
        );
    }

    #[test]
    fn fixtures_check_clean() {
        for (name, g) in fixtures::named() {
            let (lines, ok) = check_lines(&GraphDocument::cellular(g));
            assert!(ok, "{name}: {lines:?}");
            assert!(
                lines.iter().all(|l| l.starts_with("PASS")),
                "{name}: {lines:?}"
            );
        }
    }
}
