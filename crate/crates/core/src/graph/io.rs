//! Edge-list text format.
//!
//! ```text
//! n m
//! u v        (m lines, 0 <= u < v < n, sorted lexicographically)
//! ```
//!
//! The loader also accepts pairs written as `v u` and lines in any order,
//! but rejects self-loops, duplicates and ids outside `0..n`.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, text: &str) -> Result<(usize, usize), EdgeListError> {
    let mut fields = text.split_ascii_whitespace();
    let mut next = |what: &str| -> Result<usize, EdgeListError> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("{what} `{tok}` is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two fields"));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (line_no, header) = lines.next().ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let (n, m) = parse_pair(line_no, header)?;

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = HashSet::new();
    let mut count = 0;
    for (line_no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let (u, v) = parse_pair(line_no, line)?;
        if u >= n || v >= n {
            return Err(parse_err(line_no, GraphError::VertexOutOfRange { vertex: u.max(v), n }.to_string()));
        }
        if u == v {
            return Err(parse_err(line_no, GraphError::SelfLoop(u).to_string()));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        if !seen.insert((lo, hi)) {
            return Err(parse_err(line_no, GraphError::DuplicateEdge(lo, hi).to_string()));
        }
        adj[lo].push(hi);
        adj[hi].push(lo);
        count += 1;
    }
    if count != m {
        return Err(parse_err(
            line_no,
            format!("header declares {m} edges but {count} were listed"),
        ));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.num_edges() + 1));
    writeln!(out, "{} {}", g.num_vertices(), g.num_edges()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Graph, EdgeListError> {
    parse_edge_list(&fs::read_to_string(path)?)
}

pub fn store_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<(), EdgeListError> {
    fs::write(path, format_edge_list(g))?;
    Ok(())
}
