//! Plain-text graph format.
//!
//! ```text
//! c optional comment lines
//! p dconn <n> <m> <U>
//! w <v> <weight>        (optional, one per vertex)
//! a <tail> <head> <cap>
//! ```
//!
//! Vertex ids are 0-indexed. [`write_graph`] emits the header, then weight
//! lines for every vertex if the graph carries weights, then edges in
//! order, so `write ∘ parse ∘ write` is the identity.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::error::GraphError;
use crate::graph::{DiGraph, Edge, VertexWeights};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    Constraint { line: usize, source: GraphError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

struct Line<'a> {
    number: usize,
    toks: Vec<(usize, &'a str)>,
    len: usize,
}

impl Line<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> IoError {
        IoError::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn expect_len(&self, want: usize) -> Result<(), IoError> {
        if self.toks.len() < want {
            Err(self.err(self.len + 1, format!("expected {} fields", want)))
        } else if self.toks.len() > want {
            Err(self.err(self.toks[want].0, "unexpected trailing field"))
        } else {
            Ok(())
        }
    }

    fn num<T: std::str::FromStr>(&self, i: usize, what: &str) -> Result<T, IoError> {
        let (col, tok) = self.toks[i];
        tok.parse()
            .map_err(|_| self.err(col, format!("invalid {what} `{tok}`")))
    }

    fn constraint(&self, source: GraphError) -> IoError {
        IoError::Constraint {
            line: self.number,
            source,
        }
    }
}

/// Parses a graph; errors carry the 1-based line (and column for syntax
/// errors).
pub fn parse_graph(text: &str) -> Result<DiGraph, IoError> {
    let mut header: Option<(usize, usize, u64)> = None;
    let mut weights: Vec<Option<u64>> = Vec::new();
    let mut any_weight = false;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = Line {
            number: idx + 1,
            toks: tokens(raw),
            len: raw.len(),
        };
        last_line = line.number;
        let Some(&(col, kind)) = line.toks.first() else {
            continue;
        };
        if kind == "c" {
            continue;
        }
        let Some((n, _, _)) = header else {
            if kind != "p" {
                return Err(line.err(col, "expected header `p dconn <n> <m> <U>`"));
            }
            line.expect_len(5)?;
            if line.toks[1].1 != "dconn" {
                return Err(line.err(line.toks[1].0, "expected format name `dconn`"));
            }
            let n = line.num(2, "vertex count")?;
            let m = line.num(3, "edge count")?;
            let u = line.num(4, "capacity bound")?;
            header = Some((n, m, u));
            weights = vec![None; n];
            continue;
        };
        let vertex = |i: usize| -> Result<usize, IoError> {
            let v: usize = line.num(i, "vertex id")?;
            if v >= n {
                return Err(line.constraint(GraphError::BadId { id: v, n }));
            }
            Ok(v)
        };
        match kind {
            "p" => return Err(line.err(col, "duplicate header")),
            "w" => {
                line.expect_len(3)?;
                let v = vertex(1)?;
                let w: u64 = line.num(2, "weight")?;
                if w == 0 {
                    return Err(line.constraint(GraphError::ZeroWeight(v)));
                }
                if weights[v].replace(w).is_some() {
                    return Err(line.err(line.toks[1].0, format!("weight of vertex {v} given twice")));
                }
                any_weight = true;
            }
            "a" => {
                line.expect_len(4)?;
                let tail = vertex(1)?;
                let head = vertex(2)?;
                let cap: u64 = line.num(3, "capacity")?;
                if cap == 0 {
                    return Err(line.constraint(GraphError::ZeroCap { tail, head }));
                }
                if tail == head {
                    return Err(line.constraint(GraphError::SelfLoop(tail)));
                }
                if !seen.insert((tail, head)) {
                    return Err(line.constraint(GraphError::DuplicateEdge { tail, head }));
                }
                edges.push(Edge::new(tail, head, cap));
            }
            other => return Err(line.err(col, format!("unknown line type `{other}`"))),
        }
    }

    let Some((n, m, u)) = header else {
        return Err(IoError::Parse {
            line: 1,
            column: 1,
            message: "missing header `p dconn <n> <m> <U>`".into(),
        });
    };
    if edges.len() != m {
        return Err(IoError::Parse {
            line: last_line.max(1),
            column: 1,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    let weights = if any_weight {
        Some(
            VertexWeights::new(weights.into_iter().map(|w| w.unwrap_or(1)).collect())
                .expect("weights checked positive"),
        )
    } else {
        None
    };
    let g = DiGraph::from_unique_edges(n, edges, weights, 1);
    g.with_cap_bound(u).map_err(|source| IoError::Constraint { line: 1, source })
}

pub fn read_graph(path: &Path) -> Result<DiGraph, IoError> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph(g: &DiGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p dconn {} {} {}", g.n(), g.m(), g.cap_bound());
    if let Some(w) = g.weights() {
        for (v, weight) in w.as_slice().iter().enumerate() {
            let _ = writeln!(out, "w {v} {weight}");
        }
    }
    for e in g.edges() {
        let _ = writeln!(out, "a {} {} {}", e.tail, e.head, e.cap);
    }
    out
}

pub fn save_graph(g: &DiGraph, path: &Path) -> Result<(), IoError> {
    std::fs::write(path, write_graph(g))?;
    Ok(())
}
