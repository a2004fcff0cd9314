//! graph6 and plain edge-list serialization.
//!
//! graph6 follows the standard layout: a size header (`n + 63` for
//! `n <= 62`, `126` plus three bytes up to 258047, `126 126` plus six bytes
//! beyond) followed by the upper triangle of the adjacency matrix in column
//! order, packed six bits per printable byte.
//!
//! The edge-list format is a first line `n m` followed by `m` lines `u v`
//! with 0-based endpoints. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Encode a graph as a single graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decode one graph6 string. An optional `>>graph6<<` prefix is accepted.
pub fn from_graph6(line: &str) -> Result<Graph> {
    let token = line.trim();
    let body = token.strip_prefix(HEADER).unwrap_or(token);
    let bytes = body.as_bytes();
    let bad = |detail: &str| Error::parse(token, detail);
    if bytes.is_empty() {
        return Err(bad("empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!(
            "byte {b:#04x} outside the graph6 range 63..=126"
        )));
    }
    let six = |b: u8| (b - BIAS) as usize;
    let (n, rest) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated size header"));
        }
        let n = bytes[1..4].iter().fold(0, |acc, &b| (acc << 6) | six(b));
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(bad("truncated size header"));
        }
        let n = bytes[2..8].iter().fold(0, |acc, &b| (acc << 6) | six(b));
        (n, &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if rest.len() != expected {
        return Err(bad(&format!(
            "expected {expected} data bytes for n={n}, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(rest[k / 6]);
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && six(rest[k / 6]) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(bad("nonzero padding bits"));
    }
    Graph::from_edge_list(n, &edges)
}

/// Edge-list text: `n m` then one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

fn parse_count(token: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(token, "expected a non-negative integer"))
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((parse_count(a)?, parse_count(b)?)),
        _ => Err(Error::parse(line, "expected exactly two integers")),
    }
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::parse("", "empty edge list"))?;
    let (n, m) = parse_pair(header)?;
    let edges = lines.map(parse_pair).collect::<Result<Vec<_>>>()?;
    if edges.len() != m {
        return Err(Error::parse(
            header,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

/// Interchange formats understood by [`read_graphs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl Format {
    /// Pick a format from a file extension (`.g6`, `.el`).
    pub fn from_extension(path: &str) -> Option<Format> {
        let ext = std::path::Path::new(path).extension()?.to_str()?;
        match ext {
            "g6" | "graph6" => Some(Format::Graph6),
            "el" | "edges" | "txt" => Some(Format::EdgeList),
            _ => None,
        }
    }

    /// Guess from content: an edge list starts with two integers.
    pub fn sniff(text: &str) -> Format {
        match content_lines(text).next() {
            Some(first) if parse_pair(first).is_ok() => Format::EdgeList,
            _ => Format::Graph6,
        }
    }
}

/// Read every graph in `text`: one per line for graph6, exactly one for
/// an edge list.
pub fn read_graphs(text: &str, format: Format) -> Result<Vec<Graph>> {
    match format {
        Format::Graph6 => content_lines(text).map(from_graph6).collect(),
        Format::EdgeList => Ok(vec![from_edge_list(text)?]),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g) + "\n",
        Format::EdgeList => to_edge_list(g),
    }
}
