//! Text formats for graphs: a line-oriented edge list and graph6.
//!
//! Edge list: the first non-comment line is the order `n`; every further
//! line is a 0-based edge `u v`. `#` starts a comment. Serialization sorts
//! the edges, so `serialize(parse(x))` is a canonical form of `x`.
//!
//! graph6 follows the usual definition: one byte `n + 63`, then the upper
//! triangle column by column (`(0,1), (0,2), (1,2), (0,3), ...`) packed six
//! bits per byte, each byte offset by 63. An optional `>>graph6<<` header is
//! accepted on input.

use std::fmt;
use std::str::FromStr;

use tdgame_core::{Graph, SOLVER_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

impl FromStr for GraphFormat {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "graph6" => Ok(GraphFormat::Graph6),
            _ => Err(ParseError::UnknownFormat(s.to_string())),
        }
    }
}

/// A serialized graph tagged with its format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphText {
    pub format: GraphFormat,
    pub payload: String,
}

impl GraphText {
    pub fn new(format: GraphFormat, payload: impl Into<String>) -> Self {
        GraphText { format, payload: payload.into() }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("unknown graph format `{0}` (expected edgelist or graph6)")]
    UnknownFormat(String),
    #[error("empty input")]
    Empty,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { line: usize, vertex: usize, order: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph of order {order} exceeds the capacity {cap}")]
    Capacity { order: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] tdgame_core::Error),
}

impl ParseError {
    pub fn is_capacity(&self) -> bool {
        matches!(self, ParseError::Capacity { .. } | ParseError::Graph(tdgame_core::Error::Capacity { .. }))
    }
}

pub fn parse_graph(text: &GraphText) -> Result<Graph, ParseError> {
    match text.format {
        GraphFormat::EdgeList => parse_edge_list(&text.payload),
        GraphFormat::Graph6 => parse_graph6(&text.payload),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> GraphText {
    let payload = match format {
        GraphFormat::EdgeList => edge_list(g),
        GraphFormat::Graph6 => graph6(g),
    };
    GraphText { format, payload }
}

fn check_capacity(order: usize) -> Result<(), ParseError> {
    if order > SOLVER_CAP {
        return Err(ParseError::Capacity { order, cap: SOLVER_CAP });
    }
    Ok(())
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(ParseError::Empty)?;
    let order: usize = header.parse().map_err(|_| ParseError::Syntax {
        line,
        message: format!("expected the vertex count, found `{header}`"),
    })?;
    check_capacity(order)?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(ParseError::Syntax { line, message: format!("expected `u v`, found `{l}`") });
        };
        let vertex = |s: &str| -> Result<usize, ParseError> {
            let v = s
                .parse()
                .map_err(|_| ParseError::Syntax { line, message: format!("`{s}` is not a vertex index") })?;
            if v >= order {
                return Err(ParseError::VertexOutOfRange { line, vertex: v, order });
            }
            Ok(v)
        };
        edges.push((vertex(a)?, vertex(b)?));
    }
    Ok(Graph::new(order, edges)?)
}

fn edge_list(g: &Graph) -> String {
    let mut out = g.order().to_string();
    for (u, v) in g.edges() {
        out.push_str(&format!("\n{u} {v}"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6(format!("byte {b:#04x} outside the printable range")));
    }
    let (order, body) = match bytes {
        [126, 126, rest @ ..] => (sextets(rest, 6)?, &rest[6..]),
        [126, rest @ ..] => (sextets(rest, 3)?, &rest[3..]),
        [first, rest @ ..] => (usize::from(first - 63), rest),
        [] => unreachable!(),
    };
    let bits = order * order.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(ParseError::Graph6(format!(
            "order {order} needs {want} data bytes, found {}",
            body.len()
        )));
    }
    check_capacity(order)?;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(order, edges)?)
}

/// Big-endian number in the first `count` bytes of `bytes`.
fn sextets(bytes: &[u8], count: usize) -> Result<usize, ParseError> {
    if bytes.len() < count {
        return Err(ParseError::Graph6("truncated order field".into()));
    }
    Ok(bytes[..count].iter().fold(0, |acc, &b| acc << 6 | usize::from(b - 63)))
}

fn graph6(g: &Graph) -> String {
    let n = g.order();
    // SOLVER_CAP keeps every order in the one-byte form.
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Splits a multi-graph file into single payloads: one graph per line for
/// graph6, blank-line separated blocks for edge lists.
pub fn split_payloads(text: &str, format: GraphFormat) -> Vec<String> {
    match format {
        GraphFormat::Graph6 => {
            text.lines().map(str::trim).filter(|l| !l.is_empty()).map(str::to_string).collect()
        }
        GraphFormat::EdgeList => {
            let mut blocks = Vec::new();
            let mut cur = String::new();
            for line in text.lines() {
                if line.trim().is_empty() {
                    if !cur.trim().is_empty() {
                        blocks.push(std::mem::take(&mut cur));
                    }
                    cur.clear();
                } else {
                    cur.push_str(line);
                    cur.push('\n');
                }
            }
            if !cur.trim().is_empty() {
                blocks.push(cur);
            }
            blocks
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(format: GraphFormat, s: &str) -> Result<Graph, ParseError> {
        parse_graph(&GraphText::new(format, s))
    }

    #[test]
    fn edge_list_basics() {
        let p3 = parse(GraphFormat::EdgeList, "3\n0 1\n1 2").unwrap();
        assert_eq!(p3.edges(), [(0, 1), (1, 2)]);
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(serialize_graph(&k2, GraphFormat::EdgeList).payload, "2\n0 1");
        let messy = "# comment\n 4 \n3 2 # trailing\n\n1 0\n0 1\n";
        assert_eq!(
            serialize_graph(&parse(GraphFormat::EdgeList, messy).unwrap(), GraphFormat::EdgeList).payload,
            "4\n0 1\n2 3"
        );
    }

    #[test]
    fn edge_list_errors() {
        use GraphFormat::EdgeList as E;
        assert!(matches!(parse(E, ""), Err(ParseError::Empty)));
        assert!(matches!(parse(E, "x\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse(E, "3\n0 1 2"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse(E, "3\n0 3"), Err(ParseError::VertexOutOfRange { vertex: 3, order: 3, .. })));
        assert!(matches!(parse(E, "3\n1 1"), Err(ParseError::Graph(tdgame_core::Error::SelfLoop(1)))));
        assert!(parse(E, "27").unwrap_err().is_capacity());
    }

    #[test]
    fn graph6_known_payloads() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(serialize_graph(&p3, GraphFormat::Graph6).payload, "Bg");
        let petersen = parse(GraphFormat::Graph6, "IheA@GUAo").unwrap();
        assert_eq!(petersen.edge_count(), 15);
        assert!(petersen.degree_sequence().iter().all(|&d| d == 3));
        assert_eq!(parse(GraphFormat::Graph6, ">>graph6<<Bg").unwrap(), p3);
        assert_eq!(serialize_graph(&Graph::new(0, []).unwrap(), GraphFormat::Graph6).payload, "?");
    }

    #[test]
    fn graph6_errors() {
        use GraphFormat::Graph6 as G;
        assert!(matches!(parse(G, "Bgg"), Err(ParseError::Graph6(_))));
        assert!(matches!(parse(G, "C"), Err(ParseError::Graph6(_))));
        assert!(matches!(parse(G, "B\x01"), Err(ParseError::Graph6(_))));
        // order 30 in the one-byte form, with the right amount of data
        let big = format!("{}{}", (30 + 63) as u8 as char, "?".repeat(73));
        assert!(parse(G, &big).unwrap_err().is_capacity());
        assert!(matches!(parse(G, "~??"), Err(ParseError::Graph6(_))));
    }

    #[test]
    fn split_files() {
        assert_eq!(split_payloads("Bg\n\nC~\n", GraphFormat::Graph6), ["Bg", "C~"]);
        assert_eq!(split_payloads("2\n0 1\n\n\n3\n0 1\n", GraphFormat::EdgeList).len(), 2);
    }
}
