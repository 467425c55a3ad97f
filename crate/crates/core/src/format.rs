//! The line-oriented gem file format.
//!
//! ```text
//! # optional comments
//! dim 4
//! vertices 2
//! edge 0 1 0
//! edge 0 1 1
//! ...
//! ```
//!
//! Exactly `(n+1)·p` edge lines are required. Output of [`serialize`] lists
//! edges sorted by `(color, min endpoint, max endpoint)`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::error::GraphError;
use crate::graph::ColoredGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Invariant(#[from] GraphError),
}

/// A parse failure. `line` and `column` are 1-based; `line == 0` marks an
/// error detected only at the end of input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn syntax(line: usize, column: usize, msg: impl Into<String>) -> Self {
        ParseError { line, column, kind: ParseErrorKind::Syntax(msg.into()) }
    }

    fn invariant(line: usize, column: usize, e: GraphError) -> Self {
        ParseError { line, column, kind: ParseErrorKind::Invariant(e) }
    }
}

struct Tokens<'a> {
    line: usize,
    items: Vec<(usize, &'a str)>,
}

fn tokenize(line_no: usize, text: &str) -> Tokens<'_> {
    let mut items = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                items.push((s + 1, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        items.push((s + 1, &text[s..]));
    }
    Tokens { line: line_no, items }
}

impl Tokens<'_> {
    fn number(&self, idx: usize, what: &str) -> Result<(usize, usize), ParseError> {
        let end_col = self.items.last().map(|(c, t)| c + t.len()).unwrap_or(1);
        let (col, tok) = self
            .items
            .get(idx)
            .ok_or_else(|| ParseError::syntax(self.line, end_col, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map(|n| (n, *col))
            .map_err(|_| ParseError::syntax(self.line, *col, format!("expected {what}, found `{tok}`")))
    }

    fn expect_len(&self, len: usize) -> Result<(), ParseError> {
        if let Some((col, tok)) = self.items.get(len) {
            return Err(ParseError::syntax(self.line, *col, format!("unexpected token `{tok}`")));
        }
        Ok(())
    }
}

/// Parses gem-file contents into a validated graph.
pub fn parse(text: &str) -> Result<ColoredGraph, ParseError> {
    let mut dim: Option<usize> = None;
    let mut order: Option<usize> = None;
    let mut adj: Vec<usize> = Vec::new();
    let mut edge_count = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokenize(line_no, raw);
        let (kw_col, kw) = toks.items[0];
        match kw {
            "dim" => {
                if dim.is_some() {
                    return Err(ParseError::syntax(line_no, kw_col, "duplicate `dim` header"));
                }
                let (n, col) = toks.number(1, "dimension")?;
                toks.expect_len(2)?;
                if !(2..=crate::color::MAX_DIM).contains(&n) {
                    return Err(ParseError::invariant(line_no, col, GraphError::UnsupportedDimension(n)));
                }
                dim = Some(n);
            }
            "vertices" => {
                if dim.is_none() {
                    return Err(ParseError::syntax(line_no, kw_col, "`vertices` before `dim`"));
                }
                if order.is_some() {
                    return Err(ParseError::syntax(line_no, kw_col, "duplicate `vertices` header"));
                }
                let (v, col) = toks.number(1, "vertex count")?;
                toks.expect_len(2)?;
                if v == 0 || v % 2 != 0 {
                    return Err(ParseError::invariant(line_no, col, GraphError::OddVertexCount(v)));
                }
                order = Some(v);
                adj = vec![usize::MAX; v * (dim.unwrap() + 1)];
            }
            "edge" => {
                let (Some(n), Some(ord)) = (dim, order) else {
                    return Err(ParseError::syntax(line_no, kw_col, "`edge` before headers"));
                };
                let (u, ucol) = toks.number(1, "vertex")?;
                let (v, vcol) = toks.number(2, "vertex")?;
                let (c, ccol) = toks.number(3, "color")?;
                toks.expect_len(4)?;
                for (x, col) in [(u, ucol), (v, vcol)] {
                    if x >= ord {
                        return Err(ParseError::invariant(
                            line_no,
                            col,
                            GraphError::VertexOutOfRange { vertex: x, order: ord },
                        ));
                    }
                }
                if c > n {
                    return Err(ParseError::invariant(
                        line_no,
                        ccol,
                        GraphError::ColorOutOfRange { color: c, dim: n },
                    ));
                }
                if u == v {
                    return Err(ParseError::invariant(line_no, vcol, GraphError::Loop { vertex: u, color: c }));
                }
                let k = n + 1;
                for (x, y, col) in [(u, v, ucol), (v, u, vcol)] {
                    let slot = &mut adj[x * k + c];
                    if *slot != usize::MAX {
                        return Err(ParseError::invariant(
                            line_no,
                            col,
                            GraphError::DuplicateColor { vertex: x, color: c },
                        ));
                    }
                    *slot = y;
                }
                edge_count += 1;
            }
            other => {
                return Err(ParseError::syntax(line_no, kw_col, format!("unknown keyword `{other}`")));
            }
        }
    }

    let n = dim.ok_or_else(|| ParseError::syntax(0, 0, "missing `dim` header"))?;
    let ord = order.ok_or_else(|| ParseError::syntax(0, 0, "missing `vertices` header"))?;
    let k = n + 1;
    if let Some(i) = adj.iter().position(|&w| w == usize::MAX) {
        return Err(ParseError::invariant(0, 0, GraphError::MissingColor { vertex: i / k, color: i % k }));
    }
    debug_assert_eq!(edge_count, k * ord / 2);
    Ok(ColoredGraph::from_raw(n, adj))
}

/// Canonical text form of a graph. Deterministic: edges are sorted by
/// `(color, min endpoint, max endpoint)`.
pub fn serialize(g: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", g.dim()).unwrap();
    writeln!(out, "vertices {}", g.order()).unwrap();
    for e in g.edges() {
        writeln!(out, "edge {} {} {}", e.u, e.v, e.color).unwrap();
    }
    out
}
