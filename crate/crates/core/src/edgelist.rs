//! Plain-text edge-list format.
//!
//! ```text
//! # name grid:3x2
//! # label 0 (1,1)
//! 6 7
//! 0 1
//! ...
//! ```
//!
//! The header line is `n m`, followed by `m` lines `u v` with 0-based ids.
//! Anything after `#` is a comment. Two comment forms carry metadata and are
//! read back: `# name <text>` and `# label <id> <text>`.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> EdgeListError {
    EdgeListError::Syntax {
        line,
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<Graph, EdgeListError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, String)> = Vec::new();
    let mut name = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (body, comment) = match raw.find('#') {
            Some(p) => (&raw[..p], Some(raw[p + 1..].trim())),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some(rest) = c.strip_prefix("label ") {
                let (id, label) = rest
                    .trim()
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| syntax(line_no, "label comment needs an id and a label"))?;
                let id = id
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad label id {id:?}")))?;
                labels.push((id, label.trim().to_string()));
            } else if let Some(rest) = c.strip_prefix("name ") {
                name = Some(rest.trim().to_string());
            }
        }
        let mut fields = body.split_whitespace();
        let Some(first) = fields.next() else { continue };
        let second = fields
            .next()
            .ok_or_else(|| syntax(line_no, "expected two integers"))?;
        if fields.next().is_some() {
            return Err(syntax(line_no, "trailing fields"));
        }
        let a: usize = first
            .parse()
            .map_err(|_| syntax(line_no, format!("not an integer: {first:?}")))?;
        let b: usize = second
            .parse()
            .map_err(|_| syntax(line_no, format!("not an integer: {second:?}")))?;
        if header.is_none() {
            header = Some((a, b));
        } else {
            edges.push((a, b));
        }
    }

    let (n, m) = header.ok_or_else(|| syntax(0, "missing `n m` header"))?;
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    let mut g = Graph::from_edges(n, edges)?;
    if !labels.is_empty() {
        let mut table = vec![None; n];
        for (id, label) in labels {
            if id >= n {
                return Err(GraphError::InvalidVertexId { id, n }.into());
            }
            table[id] = Some(label);
        }
        let filled: Vec<String> = table
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.unwrap_or_else(|| v.to_string()))
            .collect();
        g = g.with_labels(filled)?;
    }
    if let Some(name) = name {
        g = g.with_name(name);
    }
    Ok(g)
}

/// Renders `g` in canonical form: metadata comments, header, then edges in
/// ascending `(u, v)` order with `u < v`.
pub fn render(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        let _ = writeln!(out, "# name {name}");
    }
    if let Some(labels) = g.labels() {
        for (v, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "# label {v} {l}");
        }
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Graph, EdgeListError> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn write_file(g: &Graph, path: impl AsRef<Path>) -> Result<(), EdgeListError> {
    std::fs::write(path, render(g))?;
    Ok(())
}
