//! Graph file formats: JSON (`{"n", "edges", "labels"?}`), a plain edge
//! list (first line `n`, then one `u v` pair per line, `#` comments), and
//! DOT output.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphDoc, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses either format; JSON is recognised by a leading `{`.
pub fn parse_graph_doc(text: &str) -> Result<GraphDoc, IoError> {
    if text.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(text)?);
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = lines.next().ok_or(IoError::Parse {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n = first.parse().map_err(|_| IoError::Parse {
        line,
        msg: format!("expected a vertex count, found {first:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
        match parsed.as_deref() {
            Some([u, v]) => edges.push([*u, *v]),
            _ => {
                return Err(IoError::Parse {
                    line,
                    msg: format!("expected two vertex ids, found {l:?}"),
                })
            }
        }
    }
    Ok(GraphDoc { n, edges, labels: None })
}

pub fn read_graph_doc(path: &Path) -> Result<GraphDoc, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph_doc(&text)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT rendering; vertices may carry labels and colour classes.
pub fn to_dot(g: &Graph, labels: Option<&[String]>, colors: Option<&[usize]>) -> String {
    const PALETTE: [&str; 8] = [
        "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf",
    ];
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let label = labels.map_or_else(|| v.to_string(), |ls| ls[v].clone());
        let _ = write!(out, "  {v} [label=\"{}\"", label.replace('"', "\\\""));
        if let Some(cs) = colors {
            let _ = write!(
                out,
                ", style=filled, fillcolor=\"{}\", xlabel=\"{}\"",
                PALETTE[cs[v] % PALETTE.len()],
                cs[v]
            );
        }
        out.push_str("];\n");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
