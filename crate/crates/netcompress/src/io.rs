//! Edge-list and node-attribute file formats.
//!
//! An edge list is plain text, one edge per line as two whitespace-separated
//! labels; blank lines and lines starting with `#` are ignored. Labels are
//! arbitrary tokens and are mapped to dense node indices in order of first
//! appearance, so numeric and named inputs both work.
//!
//! A node-attribute file (for constrained rewiring) has one line per node:
//! `label threshold component...`, same comment rules.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use thiserror::Error;

use crate::evolution::NodeConstraint;
use crate::graph::{EdgeKey, Graph, GraphError, NodeId};

#[derive(Debug, Error)]
pub enum FileFormatError {
    #[error("ParseError: {path}:{line}: {message}")]
    ParseError {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{source} at {path}:{line}")]
    InvalidEdge {
        path: String,
        line: usize,
        source: GraphError,
    },
    #[error("MissingAttributes: no attribute line for node '{label}'")]
    MissingAttributes { label: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// How to treat an input edge that appears more than once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DuplicatePolicy {
    /// Reject the file (default).
    #[default]
    Error,
    /// Keep the first occurrence and drop repeats.
    Collapse,
}

/// A graph together with the original labels of its nodes
/// (`labels[node.index()]`).
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LoadedGraph {
    /// Wraps a generated graph whose labels are just its indices.
    pub fn from_graph(graph: Graph) -> LoadedGraph {
        let labels = (0..graph.node_count()).map(|i| i.to_string()).collect();
        LoadedGraph { graph, labels }
    }
}

pub fn read_edge_list(path: &Path, policy: DuplicatePolicy) -> Result<LoadedGraph, FileFormatError> {
    let text = fs::read_to_string(path)?;
    parse_edge_list(&text, &path.display().to_string(), policy)
}

pub fn parse_edge_list(
    text: &str,
    path: &str,
    policy: DuplicatePolicy,
) -> Result<LoadedGraph, FileFormatError> {
    let mut labels: Vec<String> = Vec::new();
    let mut index_of: BTreeMap<String, usize> = BTreeMap::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)

    for (line_index, raw) in text.lines().enumerate() {
        let line_number = line_index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(FileFormatError::ParseError {
                    path: path.into(),
                    line: line_number,
                    message: format!("expected two labels, got '{line}'"),
                })
            }
        };
        let mut intern = |label: &str| -> usize {
            *index_of.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            })
        };
        let u = intern(a);
        let v = intern(b);
        edges.push((u, v, line_number));
    }

    let mut graph = Graph::empty(labels.len());
    for (u, v, line) in edges {
        if u == v {
            return Err(FileFormatError::InvalidEdge {
                path: path.into(),
                line,
                source: GraphError::SelfLoop(NodeId(u)),
            });
        }
        match graph.add_edge(EdgeKey::new(NodeId(u), NodeId(v))) {
            Ok(()) => {}
            Err(GraphError::EdgeAlreadyExists(_)) => match policy {
                DuplicatePolicy::Collapse => {}
                DuplicatePolicy::Error => {
                    return Err(FileFormatError::InvalidEdge {
                        path: path.into(),
                        line,
                        source: GraphError::DuplicateEdge(NodeId(u), NodeId(v)),
                    })
                }
            },
            Err(e) => {
                return Err(FileFormatError::InvalidEdge {
                    path: path.into(),
                    line,
                    source: e,
                })
            }
        }
    }
    Ok(LoadedGraph { graph, labels })
}

/// Writes one `u v` line per edge in canonical order, using node indices as
/// labels. Byte-stable for a given graph.
pub fn write_edge_list(g: &Graph, path: &Path) -> Result<(), FileFormatError> {
    let mut out = String::new();
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u().index(), e.v().index()));
    }
    let mut file = fs::File::create(path)?;
    file.write_all(out.as_bytes())?;
    Ok(())
}

/// As [`write_edge_list`] but preserving the original labels, so that a file
/// read back in round-trips its edge set.
pub fn write_edge_list_labeled(
    g: &Graph,
    labels: &[String],
    path: &Path,
) -> Result<(), FileFormatError> {
    let mut out = String::new();
    for e in g.edges() {
        out.push_str(&format!(
            "{} {}\n",
            labels[e.u().index()],
            labels[e.v().index()]
        ));
    }
    let mut file = fs::File::create(path)?;
    file.write_all(out.as_bytes())?;
    Ok(())
}

/// Induced subgraph on the largest connected component, nodes relabeled
/// densely in ascending original order. Returns the subgraph and, for each
/// new node, its original index.
pub fn largest_component_subgraph(g: &Graph) -> (Graph, Vec<usize>) {
    let components = g.connected_components();
    let largest = components
        .iter()
        .max_by_key(|c| c.len())
        .cloned()
        .unwrap_or_default();
    let mut new_index = vec![usize::MAX; g.node_count()];
    for (i, &v) in largest.iter().enumerate() {
        new_index[v.index()] = i;
    }
    let mut sub = Graph::empty(largest.len());
    for e in g.edges() {
        let (u, v) = (new_index[e.u().index()], new_index[e.v().index()]);
        if u != usize::MAX && v != usize::MAX {
            sub.add_edge(EdgeKey::new(NodeId(u), NodeId(v)))
                .expect("component edges are unique");
        }
    }
    (sub, largest.iter().map(|v| v.index()).collect())
}

/// Reads a node-attribute file and builds the Euclidean-distance constraint
/// for the given graph labels: each line is `label threshold component...`.
/// Every graph node must have exactly one attribute line.
pub fn read_node_constraint(
    path: &Path,
    labels: &[String],
) -> Result<NodeConstraint, FileFormatError> {
    let text = fs::read_to_string(path)?;
    let path_str = path.display().to_string();
    let mut by_label: BTreeMap<String, (f64, Vec<f64>)> = BTreeMap::new();
    for (line_index, raw) in text.lines().enumerate() {
        let line_number = line_index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() < 2 {
            return Err(FileFormatError::ParseError {
                path: path_str.clone(),
                line: line_number,
                message: "expected 'label threshold component...'".into(),
            });
        }
        let mut values = Vec::with_capacity(tokens.len() - 1);
        for token in &tokens[1..] {
            values.push(token.parse::<f64>().map_err(|e| FileFormatError::ParseError {
                path: path_str.clone(),
                line: line_number,
                message: format!("bad number '{token}': {e}"),
            })?);
        }
        let threshold = values[0];
        let attributes = values[1..].to_vec();
        by_label.insert(tokens[0].to_string(), (threshold, attributes));
    }

    let mut thresholds = Vec::with_capacity(labels.len());
    let mut attributes = Vec::with_capacity(labels.len());
    for label in labels {
        let (threshold, attr) = by_label
            .get(label)
            .ok_or_else(|| FileFormatError::MissingAttributes {
                label: label.clone(),
            })?;
        thresholds.push(*threshold);
        attributes.push(attr.clone());
    }
    Ok(NodeConstraint::euclidean(attributes, thresholds))
}
