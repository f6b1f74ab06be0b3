//! Graphviz (DOT) export.
//!
//! The output is deterministic: node statements in index order, then edge
//! statements in lexicographic order, so equal inputs serialize to equal
//! bytes. A caller-supplied set of edges can be rendered dashed — the CLI
//! uses this to mark edges that are present in an enhanced power graph but
//! absent from the power graph it came from.

use std::collections::BTreeSet;

use crate::document::GraphDocument;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders the document as a DOT `graph`. Every edge listed in `dashed`
/// (in either orientation) gets `style=dashed`; edges not present in the
/// graph are ignored.
pub fn to_dot(doc: &GraphDocument, dashed: &[(usize, usize)]) -> String {
    let dashed: BTreeSet<(usize, usize)> = dashed
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    let graph = doc.graph();
    let mut out = String::from("graph {\n");
    for v in 0..graph.vertex_count() {
        match doc.labels() {
            Some(labels) => {
                out.push_str(&format!("  {v} [label=\"{}\"];\n", escape(&labels[v])));
            }
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (a, b) in graph.edges() {
        if dashed.contains(&(a, b)) {
            out.push_str(&format!("  {a} -- {b} [style=dashed];\n"));
        } else {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn labeled_graph_bytes() {
        let graph = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let doc = GraphDocument::new(
            graph,
            Some(vec!["e".to_string(), "a".to_string(), "a^2".to_string()]),
        );
        let expected = "graph {\n  0 [label=\"e\"];\n  1 [label=\"a\"];\n  2 [label=\"a^2\"];\n  0 -- 1;\n  1 -- 2;\n}\n";
        assert_eq!(to_dot(&doc, &[]), expected);
    }

    #[test]
    fn unlabeled_graph_declares_isolated_vertices() {
        let doc = GraphDocument::unlabeled(Graph::from_edges(3, &[(0, 1)]).unwrap());
        let expected = "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n}\n";
        assert_eq!(to_dot(&doc, &[]), expected);
    }

    #[test]
    fn dashed_edges_are_styled() {
        let doc = GraphDocument::unlabeled(Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());
        let dot = to_dot(&doc, &[(2, 1)]); // orientation is normalized
        assert!(dot.contains("  0 -- 1;\n"));
        assert!(dot.contains("  1 -- 2 [style=dashed];\n"));
    }

    #[test]
    fn labels_are_escaped() {
        let doc = GraphDocument::new(
            Graph::empty(1),
            Some(vec!["say \"hi\" \\ bye".to_string()]),
        );
        assert_eq!(
            to_dot(&doc, &[]),
            "graph {\n  0 [label=\"say \\\"hi\\\" \\\\ bye\"];\n}\n"
        );
    }
}
