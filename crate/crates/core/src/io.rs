//! Plain edge-list documents.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines)
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: graph must have at least one vertex")]
    EmptyGraph { line: usize },
    #[error("line {line}: expected two vertices per edge line")]
    MalformedEdge { line: usize },
    #[error("line {line}: bad token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}} (first seen on line {first})")]
    DuplicateEdge {
        line: usize,
        u: usize,
        v: usize,
        first: usize,
    },
    #[error("line {line}: header declares {expected} edges but {found} were found")]
    WrongEdgeCount {
        line: usize,
        expected: usize,
        found: usize,
    },
}

fn parse_count(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::BadToken {
        line,
        token: token.to_string(),
    })
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n_tok, m_tok] = fields[..] else {
        return Err(ParseError::MalformedHeader { line: header_line });
    };
    let (n, m) = match (n_tok.parse::<usize>(), m_tok.parse::<usize>()) {
        (Ok(n), Ok(m)) => (n, m),
        _ => return Err(ParseError::MalformedHeader { line: header_line }),
    };
    if n == 0 {
        return Err(ParseError::EmptyGraph { line: header_line });
    }

    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    let mut first_seen: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(ParseError::WrongEdgeCount {
                line,
                expected: m,
                found: m + 1,
            });
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(ParseError::MalformedEdge { line });
        };
        let (u, v) = (parse_count(a, line)?, parse_count(b, line)?);
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::Loop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if let Some(&first) = first_seen.get(&key) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
                first,
            });
        }
        first_seen.insert(key, line);
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::WrongEdgeCount {
            line: last_line,
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges).expect("edges validated above"))
}

/// Canonical document: header, then edges `min max` sorted lexicographically.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Canonical document preceded by `#` comment lines.
pub fn serialize_with_comments(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    out.push_str(&serialize_graph(g));
    out
}
