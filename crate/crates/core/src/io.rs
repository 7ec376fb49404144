//! Edge-list and graph6 encodings.
//!
//! Edge lists are `"n m\n"` followed by `m` lines `"u v\n"`, 0-indexed.
//! Serialisation sorts edges with `u < v`, so canonical inputs round-trip
//! byte for byte.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "graph6" => Ok(GraphFormat::Graph6),
            other => Err(Error::parse(0, 0, format!("unknown format `{other}`"))),
        }
    }
}

/// Edge lists start with a digit; graph6 bytes are all in `63..=126`.
pub fn detect_format(text: &[u8]) -> GraphFormat {
    match text.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b) if b.is_ascii_digit() => GraphFormat::EdgeList,
        _ => GraphFormat::Graph6,
    }
}

pub fn parse_graph(text: &[u8], format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edgelist(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn serialize(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edgelist(g),
        GraphFormat::Graph6 => to_graph6(g),
    }
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses whitespace-separated integers on one line, with byte offsets.
fn fields(line: &str, line_no: usize, line_start: usize, want: usize) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(want);
    let mut offset = 0;
    for tok in line.split_ascii_whitespace() {
        let at = line[offset..].find(tok).map_or(offset, |i| offset + i);
        offset = at + tok.len();
        let value = tok.parse::<usize>().map_err(|_| {
            Error::parse(line_no, line_start + at, format!("expected a non-negative integer, found `{tok}`"))
        })?;
        out.push(value);
    }
    if out.len() != want {
        return Err(Error::parse(
            line_no,
            line_start,
            format!("expected {want} fields, found {}", out.len()),
        ));
    }
    Ok(out)
}

pub fn parse_edgelist(text: &[u8]) -> Result<Graph> {
    let text = std::str::from_utf8(text)
        .map_err(|e| Error::parse(0, e.valid_up_to(), "input is not UTF-8"))?;
    let mut lines = Vec::new();
    let mut start = 0;
    for (i, line) in text.split('\n').enumerate() {
        lines.push((i + 1, start, line));
        start += line.len() + 1;
    }
    while lines.last().is_some_and(|(_, _, l)| l.trim().is_empty()) {
        lines.pop();
    }
    let Some(&(ln, at, header)) = lines.first() else {
        return Err(Error::parse(1, 0, "missing header line `n m`"));
    };
    let h = fields(header, ln, at, 2)?;
    let (n, m) = (h[0], h[1]);
    if lines.len() - 1 != m {
        return Err(Error::parse(
            ln,
            at,
            format!("header announces {m} edges but {} edge lines follow", lines.len() - 1),
        ));
    }
    let mut g = Graph::empty(n);
    for &(ln, at, line) in &lines[1..] {
        let e = fields(line, ln, at, 2)?;
        let (u, v) = (e[0], e[1]);
        if u >= n || v >= n {
            return Err(Error::parse(ln, at, format!("vertex out of range for n={n}")));
        }
        if u == v {
            return Err(Error::parse(ln, at, format!("loop at vertex {u}")));
        }
        g.add_edge_unchecked(u, v);
    }
    Ok(g)
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// graph6 string followed by a newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out.push(b'\n');
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut data = text;
    let header = b">>graph6<<";
    let mut base = 0;
    if data.starts_with(header) {
        data = &data[header.len()..];
        base = header.len();
    }
    while data.last().is_some_and(|b| b.is_ascii_whitespace()) {
        data = &data[..data.len() - 1];
    }
    if let Some(i) = data.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(1, base + i, format!("byte {} outside the graph6 range", data[i])));
    }
    let six = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, body_start) = match data {
        [] => return Err(Error::parse(1, base, "empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => (six(&rest[..6]), 8),
        [126, 126, ..] => return Err(Error::parse(1, base, "truncated order field")),
        [126, rest @ ..] if rest.len() >= 3 => (six(&rest[..3]), 4),
        [126, ..] => return Err(Error::parse(1, base, "truncated order field")),
        [b, ..] => ((b - 63) as usize, 1),
    };
    let body = &data[body_start..];
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(Error::parse(
            1,
            base + body_start,
            format!("expected {want} adjacency bytes for n={n}, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
