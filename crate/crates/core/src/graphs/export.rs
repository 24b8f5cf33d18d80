use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{Graph, GraphError};
use crate::kernel::Elem;

/// Deterministic DOT rendering: one node line per vertex (labelled with the
/// element index and its order), then edges sorted lexicographically.
pub fn to_dot(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{} {}\" {{", graph.group_name().replace('"', "'"), graph.kind()).unwrap();
    for (pos, &v) in graph.vertices().iter().enumerate() {
        writeln!(out, "  {v} [label=\"{v} (o={})\"];", graph.vertex_order(pos)).unwrap();
    }
    for (a, b) in graph.edges() {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn export_dot(graph: &Graph, path: impl AsRef<Path>) -> Result<(), GraphError> {
    fs::write(path, to_dot(graph))?;
    Ok(())
}

/// Plain edge list, one `u v` line per edge.
pub fn to_edge_list(graph: &Graph) -> String {
    graph.edges().iter().map(|(a, b)| format!("{a} {b}\n")).collect()
}

/// Vertices and edges recovered by [`parse_edge_list`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeListGraph {
    pub vertices: Vec<Elem>,
    pub edges: Vec<(Elem, Elem)>,
}

/// Reads `u v` edge lines. DOT output from [`to_dot`] is accepted too: node
/// lines contribute vertices, `u -- v;` lines contribute edges, and the
/// header and footer are skipped. Edges come back normalized and sorted.
pub fn parse_edge_list(text: &str) -> Result<EdgeListGraph, GraphError> {
    let mut out = EdgeListGraph::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim().trim_end_matches(';').trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("graph ") || line == "}" {
            continue;
        }
        let err = |msg: &str| GraphError::Parse { line: i + 1, msg: format!("{msg}: {raw:?}") };
        let num = |t: &str| t.trim().parse::<Elem>().map_err(|_| err("expected a vertex index"));
        if let Some(idx) = line.find('[') {
            out.vertices.push(num(&line[..idx])?);
            continue;
        }
        let (a, b) = match line.split_once("--") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => {
                let parts: Vec<&str> = line.split_whitespace().collect();
                let [a, b] = parts.as_slice() else {
                    return Err(err("expected two vertices"));
                };
                (num(a)?, num(b)?)
            }
        };
        if a == b {
            return Err(err("self-loop"));
        }
        out.edges.push((a.min(b), a.max(b)));
    }
    out.vertices.sort_unstable();
    out.vertices.dedup();
    out.edges.sort_unstable();
    out.edges.dedup();
    Ok(out)
}
