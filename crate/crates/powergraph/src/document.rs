//! The plain-text graph interchange format.
//!
//! A document is line-oriented:
//!
//! ```text
//! version 1
//! vertices 4
//! label 0 e
//! label 1 g
//! label 2 g^2
//! label 3 g^3
//! edge 0 1
//! edge 0 2
//! ```
//!
//! Directives appear in that order. Labels are all-or-none: either every
//! vertex is labeled, in ascending order, or none is. Edges require
//! `a < b` and must be listed in strictly increasing lexicographic order,
//! which makes the serialized form canonical: equal documents have equal
//! bytes. Blank lines and `#` comments are accepted on input and never
//! produced on output.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("document is missing the 'version 1' header")]
    MissingVersion,
    #[error("line {line}: unsupported version '{found}' (expected 1)")]
    UnsupportedVersion { line: usize, found: String },
    #[error("line {line}: expected 'version 1'")]
    ExpectedVersion { line: usize },
    #[error("document is missing the 'vertices N' directive")]
    MissingVertices,
    #[error("line {line}: expected 'vertices N'")]
    ExpectedVertices { line: usize },
    #[error("line {line}: '{text}' is not a valid number")]
    BadNumber { line: usize, text: String },
    #[error("line {line}: malformed '{directive}' directive")]
    MalformedDirective { line: usize, directive: String },
    #[error("line {line}: unknown directive '{found}'")]
    UnknownDirective { line: usize, found: String },
    #[error("line {line}: vertex {index} is outside 0..{vertices}")]
    VertexOutOfRange {
        line: usize,
        index: usize,
        vertices: usize,
    },
    #[error("line {line}: expected label for vertex {expected}, found {found}")]
    LabelOutOfOrder {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: label text is empty")]
    EmptyLabel { line: usize },
    #[error("line {line}: all {vertices} vertices are already labeled")]
    TooManyLabels { line: usize, vertices: usize },
    #[error("labels must cover all vertices or none: found {found} of {expected}")]
    IncompleteLabels { found: usize, expected: usize },
    #[error("line {line}: label directive after the first edge")]
    LabelAfterEdges { line: usize },
    #[error("line {line}: edge ({a},{b}) must satisfy a < b")]
    EdgeNotSorted { line: usize, a: usize, b: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: edge ({a},{b}) is out of order or duplicated")]
    EdgeOutOfOrder { line: usize, a: usize, b: usize },
}

/// A graph plus optional per-vertex labels, as carried by the text format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    graph: Graph,
    labels: Option<Vec<String>>,
}

impl GraphDocument {
    /// Wraps a graph and optional labels. Labels, when present, must cover
    /// every vertex, be non-empty, and carry no surrounding whitespace or
    /// line breaks — violations are programmer errors and panic.
    pub fn new(graph: Graph, labels: Option<Vec<String>>) -> Self {
        if let Some(labels) = &labels {
            assert_eq!(labels.len(), graph.vertex_count(), "one label per vertex");
            for label in labels {
                assert!(!label.is_empty(), "labels must be non-empty");
                assert!(
                    !label.chars().any(|c| c == '\n' || c == '\r'),
                    "labels must be single-line"
                );
                assert_eq!(label, label.trim(), "labels must carry no outer whitespace");
            }
        }
        GraphDocument { graph, labels }
    }

    pub fn unlabeled(graph: Graph) -> Self {
        GraphDocument {
            graph,
            labels: None,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Canonical serialization: equal documents produce identical bytes.
    pub fn to_text(&self) -> String {
        let n = self.graph.vertex_count();
        let mut out = String::new();
        out.push_str("version 1\n");
        out.push_str(&format!("vertices {n}\n"));
        if let Some(labels) = &self.labels {
            for (i, label) in labels.iter().enumerate() {
                out.push_str(&format!("label {i} {label}\n"));
            }
        }
        for (a, b) in self.graph.edges() {
            out.push_str(&format!("edge {a} {b}\n"));
        }
        out
    }

    /// Parses the text format, enforcing the canonical ordering rules.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        enum Stage {
            Version,
            Vertices,
            Labels,
            Edges,
        }
        let mut stage = Stage::Version;
        let mut vertices = 0usize;
        let mut labels: Vec<String> = Vec::new();
        let mut graph = Graph::empty(0);
        let mut last_edge: Option<(usize, usize)> = None;

        let parse_number = |line: usize, text: &str| -> Result<usize, DocumentError> {
            text.parse().map_err(|_| DocumentError::BadNumber {
                line,
                text: text.to_string(),
            })
        };

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let directive = tokens.next().expect("non-empty line has a first token");

            match stage {
                Stage::Version => {
                    if directive != "version" {
                        return Err(DocumentError::ExpectedVersion { line });
                    }
                    let rest: Vec<&str> = tokens.collect();
                    match rest.as_slice() {
                        ["1"] => stage = Stage::Vertices,
                        [v] => {
                            return Err(DocumentError::UnsupportedVersion {
                                line,
                                found: (*v).to_string(),
                            });
                        }
                        _ => {
                            return Err(DocumentError::MalformedDirective {
                                line,
                                directive: "version".to_string(),
                            });
                        }
                    }
                }
                Stage::Vertices => {
                    if directive != "vertices" {
                        return Err(DocumentError::ExpectedVertices { line });
                    }
                    let rest: Vec<&str> = tokens.collect();
                    let [count] = rest.as_slice() else {
                        return Err(DocumentError::MalformedDirective {
                            line,
                            directive: "vertices".to_string(),
                        });
                    };
                    vertices = parse_number(line, count)?;
                    graph = Graph::empty(vertices);
                    stage = Stage::Labels;
                }
                Stage::Labels | Stage::Edges => match directive {
                    "label" => {
                        if matches!(stage, Stage::Edges) {
                            return Err(DocumentError::LabelAfterEdges { line });
                        }
                        let Some(index_text) = tokens.next() else {
                            return Err(DocumentError::MalformedDirective {
                                line,
                                directive: "label".to_string(),
                            });
                        };
                        let index = parse_number(line, index_text)?;
                        if index >= vertices {
                            return Err(DocumentError::VertexOutOfRange {
                                line,
                                index,
                                vertices,
                            });
                        }
                        if labels.len() == vertices {
                            return Err(DocumentError::TooManyLabels { line, vertices });
                        }
                        if index != labels.len() {
                            return Err(DocumentError::LabelOutOfOrder {
                                line,
                                expected: labels.len(),
                                found: index,
                            });
                        }
                        // label text: everything after the index, trimmed
                        let prefix_len = trimmed
                            .find(index_text)
                            .expect("index token came from this line")
                            + index_text.len();
                        let text = trimmed[prefix_len..].trim();
                        if text.is_empty() {
                            return Err(DocumentError::EmptyLabel { line });
                        }
                        labels.push(text.to_string());
                    }
                    "edge" => {
                        if matches!(stage, Stage::Labels)
                            && !labels.is_empty()
                            && labels.len() < vertices
                        {
                            return Err(DocumentError::IncompleteLabels {
                                found: labels.len(),
                                expected: vertices,
                            });
                        }
                        stage = Stage::Edges;
                        let rest: Vec<&str> = tokens.collect();
                        let [a_text, b_text] = rest.as_slice() else {
                            return Err(DocumentError::MalformedDirective {
                                line,
                                directive: "edge".to_string(),
                            });
                        };
                        let a = parse_number(line, a_text)?;
                        let b = parse_number(line, b_text)?;
                        for index in [a, b] {
                            if index >= vertices {
                                return Err(DocumentError::VertexOutOfRange {
                                    line,
                                    index,
                                    vertices,
                                });
                            }
                        }
                        if a == b {
                            return Err(DocumentError::SelfLoop { line, vertex: a });
                        }
                        if a > b {
                            return Err(DocumentError::EdgeNotSorted { line, a, b });
                        }
                        if let Some(last) = last_edge {
                            if (a, b) <= last {
                                return Err(DocumentError::EdgeOutOfOrder { line, a, b });
                            }
                        }
                        last_edge = Some((a, b));
                        graph.add_edge(a, b);
                    }
                    other => {
                        return Err(DocumentError::UnknownDirective {
                            line,
                            found: other.to_string(),
                        });
                    }
                },
            }
        }

        match stage {
            Stage::Version => Err(DocumentError::MissingVersion),
            Stage::Vertices => Err(DocumentError::MissingVertices),
            Stage::Labels if !labels.is_empty() && labels.len() < vertices => {
                Err(DocumentError::IncompleteLabels {
                    found: labels.len(),
                    expected: vertices,
                })
            }
            _ => Ok(GraphDocument {
                graph,
                labels: if labels.is_empty() { None } else { Some(labels) },
            }),
        }
    }
}
