//! Text formats for graphs and symmetric matrices.
//!
//! Edge-list format: optional `#` comment lines; first significant line
//! `nodes <n>`; then one `<u> <v>` pair per line, 0-based.
//! Matrix format: first line `<n>`, then n lines of n space-separated 0/1
//! digits; symmetry and a zero diagonal are validated on load.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::matrix::SymBitMatrix;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    BadGraph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = significant_lines(text);
    let (lno, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing 'nodes <n>' header"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("nodes") {
        return Err(syntax(lno, "expected 'nodes <n>' header"));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| syntax(lno, "expected a node count after 'nodes'"))?;
    if parts.next().is_some() {
        return Err(syntax(lno, "trailing tokens after node count"));
    }
    let mut edges = Vec::new();
    let mut last_line = lno;
    for (lno, line) in lines {
        last_line = lno;
        let mut parts = line.split_whitespace();
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| syntax(lno, "expected '<u> <v>'"))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| syntax(lno, "expected two endpoints"))?;
        if parts.next().is_some() {
            return Err(syntax(lno, "trailing tokens after edge"));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(|source| ParseError::BadGraph {
        line: last_line,
        source,
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "nodes {}", g.node_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<SymBitMatrix, ParseError> {
    let mut lines = significant_lines(text);
    let (lno, header) = lines.next().ok_or_else(|| syntax(1, "missing order line"))?;
    let n: usize = header
        .parse()
        .map_err(|_| syntax(lno, "expected the matrix order on the first line"))?;
    let mut rows: Vec<(usize, Vec<u8>)> = Vec::with_capacity(n);
    for (lno, line) in lines {
        let mut row = Vec::with_capacity(n);
        for tok in line.split_whitespace() {
            match tok {
                "0" => row.push(0),
                "1" => row.push(1),
                _ => return Err(syntax(lno, format!("expected 0 or 1, found '{tok}'"))),
            }
        }
        if row.len() != n {
            return Err(syntax(
                lno,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push((lno, row));
    }
    if rows.len() != n {
        return Err(syntax(
            lno,
            format!("expected {n} matrix rows, found {}", rows.len()),
        ));
    }
    let mut m = SymBitMatrix::new(n);
    for i in 0..n {
        let (lno, row) = &rows[i];
        if row[i] != 0 {
            return Err(syntax(*lno, format!("nonzero diagonal entry at ({i}, {i})")));
        }
        for j in 0..n {
            if row[j] != rows[j].1[i] {
                return Err(syntax(
                    *lno,
                    format!("matrix is not symmetric at ({i}, {j})"),
                ));
            }
            if i < j && row[j] == 1 {
                m.set(i, j, true);
            }
        }
    }
    Ok(m)
}

pub fn write_matrix(m: &SymBitMatrix) -> String {
    let n = m.order();
    let mut out = String::new();
    writeln!(out, "{n}").unwrap();
    for i in 0..n {
        let row: Vec<&str> = (0..n).map(|j| if m.get(i, j) { "1" } else { "0" }).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

/// Either accepted input shape for commands that take "a graph".
pub enum GraphInput {
    EdgeList(Graph),
    Matrix(SymBitMatrix),
}

/// Accepts both formats: an edge list starts with `nodes <n>`, a matrix with
/// a bare order.
pub fn parse_graph_input(text: &str) -> Result<GraphInput, ParseError> {
    let first = significant_lines(text).next();
    match first {
        Some((_, l)) if l.starts_with("nodes") => parse_edge_list(text).map(GraphInput::EdgeList),
        _ => parse_matrix(text).map(GraphInput::Matrix),
    }
}

impl GraphInput {
    /// The adjacency matrix, whichever way the input was written.
    pub fn into_matrix(self) -> SymBitMatrix {
        match self {
            GraphInput::EdgeList(g) => g.adjacency_matrix(),
            GraphInput::Matrix(m) => m,
        }
    }

    /// The graph, whichever way the input was written.
    pub fn into_graph(self) -> Graph {
        match self {
            GraphInput::EdgeList(g) => g,
            GraphInput::Matrix(m) => m.to_graph(),
        }
    }
}
