//! The line-oriented ribbon graph file format.
//!
//! ```text
//! ribbon v1
//! # an untwisted loop and a twisted loop on one vertex
//! vertex v a1 b1 a2 b2
//! edge e1 a1 a2 +
//! edge e2 b1 b2 -
//! ```
//!
//! The header comes first; after it, each line is a `vertex` or an `edge`
//! directive, blank, or a comment. `#` starts a comment anywhere on a
//! line. A vertex line names the vertex and lists its half-edges in
//! rotation order (possibly none); an edge line names the edge, the two
//! half-edges it joins, and `+` for untwisted or `-` for twisted.
//! Identifiers are whitespace-free ASCII tokens. Edge lines fix the edge
//! order, which the cohomology cube depends on (the groups do not, but
//! the chain-level matrices do).

use pdgh_core::ribbon::{BuildError, EdgeSpec, RibbonGraph, VertexSpec};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("expected header `ribbon v1` before any directive")]
    MissingHeader,
    #[error("line {line}: unknown directive `{found}`, expected `vertex` or `edge`")]
    UnknownDirective { line: usize, found: String },
    #[error("line {line}: vertex directive needs a name")]
    MalformedVertex { line: usize },
    #[error("line {line}: edge directive needs a name, two half-edges and a twist sign")]
    MalformedEdge { line: usize },
    #[error("line {line}: twist sign must be `+` or `-`, got `{found}`")]
    BadTwist { line: usize, found: String },
    #[error("{0}")]
    Graph(#[from] BuildError),
}

/// Parse the `ribbon v1` format. Errors carry 1-based line numbers where
/// a single line is at fault.
pub fn parse_ribbon(text: &str) -> Result<RibbonGraph, ParseError> {
    let mut vertices: Vec<VertexSpec> = Vec::new();
    let mut edges: Vec<EdgeSpec> = Vec::new();
    let mut seen_header = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = body.split_whitespace();
        let Some(head) = tokens.next() else { continue };

        if !seen_header {
            if head == "ribbon" && tokens.next() == Some("v1") && tokens.next().is_none() {
                seen_header = true;
                continue;
            }
            return Err(ParseError::MissingHeader);
        }

        match head {
            "vertex" => {
                let Some(name) = tokens.next() else {
                    return Err(ParseError::MalformedVertex { line });
                };
                vertices.push(VertexSpec {
                    name: name.to_string(),
                    rotation: tokens.map(str::to_string).collect(),
                });
            }
            "edge" => {
                let (Some(name), Some(a), Some(b), Some(sign), None) =
                    (tokens.next(), tokens.next(), tokens.next(), tokens.next(), tokens.next())
                else {
                    return Err(ParseError::MalformedEdge { line });
                };
                let twisted = match sign {
                    "+" => false,
                    "-" => true,
                    other => return Err(ParseError::BadTwist { line, found: other.to_string() }),
                };
                edges.push(EdgeSpec {
                    name: name.to_string(),
                    ends: (a.to_string(), b.to_string()),
                    twisted,
                });
            }
            other => return Err(ParseError::UnknownDirective { line, found: other.to_string() }),
        }
    }

    if !seen_header {
        return Err(ParseError::MissingHeader);
    }
    Ok(RibbonGraph::new(vertices, edges)?)
}

/// Write a graph back out in the same format. `parse_ribbon` on the
/// result reproduces the graph exactly, including vertex, edge and
/// half-edge names and all orderings.
pub fn serialize(g: &RibbonGraph) -> String {
    let mut out = String::from("ribbon v1\n");
    for v in 0..g.vertex_count() {
        out.push_str("vertex ");
        out.push_str(g.vertex_name(v));
        for &h in g.rotation(v) {
            out.push(' ');
            out.push_str(g.half_name(h));
        }
        out.push('\n');
    }
    for e in 0..g.edge_count() {
        let (a, b) = g.edge_ends(e);
        out.push_str("edge ");
        out.push_str(g.edge_name(e));
        out.push(' ');
        out.push_str(g.half_name(a));
        out.push(' ');
        out.push_str(g.half_name(b));
        out.push_str(if g.edge_twisted(e) { " -\n" } else { " +\n" });
    }
    out
}
