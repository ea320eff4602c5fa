//! Text graph files and the JSON encoding of graphs.
//!
//! ```text
//! c comment
//! p sg <n> <m>
//! e <u> <v> <s>      (m lines, 1-based u and v, s in {+1, -1, +, -})
//! ```
//!
//! Vertices are 1-based in files and JSON, 0-based everywhere else.

use serde::ser::Serializer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_sign(token: &str) -> Option<Sign> {
    match token {
        "+1" | "+" => Some(Sign::Positive),
        "-1" | "-" => Some(Sign::Negative),
        _ => None,
    }
}

/// Parses a graph file and validates the result.
pub fn parse_graph(text: &str) -> Result<SignedGraph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(parse_error(line_no, "second problem line"));
                }
                let [_, "sg", n, m] = tokens[..] else {
                    return Err(parse_error(line_no, "expected `p sg <n> <m>`"));
                };
                let n = n
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("bad vertex count {n:?}")))?;
                let m = m
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("bad edge count {m:?}")))?;
                header = Some((n, m, line_no));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(parse_error(line_no, "edge line before problem line"));
                };
                let [_, u, v, s] = tokens[..] else {
                    return Err(parse_error(line_no, "expected `e <u> <v> <s>`"));
                };
                let vertex = |t: &str| -> Result<usize> {
                    match t.parse::<usize>() {
                        Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                        _ => Err(parse_error(line_no, format!("bad vertex {t:?}"))),
                    }
                };
                let sign =
                    parse_sign(s).ok_or_else(|| parse_error(line_no, format!("bad sign {s:?}")))?;
                edges.push((vertex(u)?, vertex(v)?, sign));
            }
            Some(other) => {
                return Err(parse_error(line_no, format!("unknown line type {other:?}")));
            }
        }
    }
    let Some((n, m, line_no)) = header else {
        return Err(parse_error(0, "missing problem line"));
    };
    if edges.len() != m {
        return Err(parse_error(
            line_no,
            format!("problem line declares {m} edges, found {}", edges.len()),
        ));
    }
    SignedGraph::new(n, edges)
}

/// Canonical file text: optional comments, the problem line, then edges in
/// sorted order with `+1` / `-1` signs.
pub fn write_graph(g: &SignedGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("c ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("p sg {} {}\n", g.n(), g.edge_count()));
    for e in g.edges() {
        let s = if e.sign.is_positive() { "+1" } else { "-1" };
        out.push_str(&format!("e {} {} {}\n", e.u + 1, e.v + 1, s));
    }
    out
}

/// `{"n": .., "edges": [[u, v, s], ..]}` with 1-based vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize, i8)>,
}

impl From<&SignedGraph> for GraphJson {
    fn from(g: &SignedGraph) -> GraphJson {
        GraphJson {
            n: g.n(),
            edges: g
                .edges()
                .iter()
                .map(|e| (e.u + 1, e.v + 1, e.sign.value()))
                .collect(),
        }
    }
}

/// `serialize_with` helper for `SignedGraph` fields.
pub fn serialize_graph<S: Serializer>(
    g: &SignedGraph,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    GraphJson::from(g).serialize(s)
}
