//! Edge-list and graph6 text encodings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::MAX_VERTICES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    /// First line `n`, then one `u v` line per edge; `#` starts a comment line.
    #[default]
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edges" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::parse("format", format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::EdgeList => "edgelist",
            Format::Graph6 => "graph6",
        })
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Graph6 => to_graph6(g),
    }
}

fn parse_index(token: &str, line_no: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(format!("line {line_no}"), format!("`{token}` is not a vertex index")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));

    let (first_no, first) = lines
        .next()
        .ok_or_else(|| Error::parse("line 1", "missing vertex count"))?;
    let n = first.trim().parse::<usize>().map_err(|_| {
        Error::parse(format!("line {first_no}"), format!("`{}` is not a vertex count", first.trim()))
    })?;
    if n > MAX_VERTICES {
        return Err(Error::parse(
            format!("line {first_no}"),
            format!("vertex count {n} exceeds the supported maximum {MAX_VERTICES}"),
        ));
    }

    let mut g = Graph::empty(n)?;
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = tokens[..] else {
            return Err(Error::parse(
                format!("line {line_no}"),
                format!("expected `u v`, found `{line}`"),
            ));
        };
        let (u, v) = (parse_index(a, line_no)?, parse_index(b, line_no)?);
        if u >= n || v >= n {
            return Err(Error::parse(
                format!("line {line_no}"),
                format!("edge ({u}, {v}) has an endpoint >= {n}"),
            ));
        }
        if u == v {
            return Err(Error::parse(format!("line {line_no}"), format!("loop at vertex {u}")));
        }
        g.add_edge(u, v)?;
    }
    Ok(g)
}

/// Canonical edge list: vertex count, then edges `u v` with `u < v` in
/// lexicographic order, newline-terminated.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim_end_matches(['\n', '\r']);
    let (body, shift) = match body.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest, GRAPH6_HEADER.len()),
        None => (body, 0),
    };
    let bytes = body.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                format!("offset {}", i + shift),
                format!("byte {b:#04x} is outside the graph6 range"),
            ));
        }
    }
    let (n, header_len) = match bytes {
        [] => return Err(Error::parse("offset 0", "empty graph6 string")),
        [126, 126, ..] => {
            return Err(Error::parse(format!("offset {shift}"), "graph too large for this tool"))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse(format!("offset {}", shift + 1), "truncated vertex count"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::parse(
            format!("offset {shift}"),
            format!("vertex count {n} exceeds the supported maximum {MAX_VERTICES}"),
        ));
    }
    let data = &bytes[header_len..];
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if data.len() != bytes_needed {
        return Err(Error::parse(
            format!("offset {}", shift + header_len + data.len().min(bytes_needed)),
            format!("expected {bytes_needed} data bytes for {n} vertices, found {}", data.len()),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = data[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Standard graph6 encoding without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_path() {
        let g = parse_edge_list("3\n0 1\n1 2").unwrap();
        assert_eq!(g.neighbors(1).to_vec(), vec![0, 2]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_cycle_with_comments_and_duplicates() {
        let g = parse_edge_list("# c7\n7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n1 0\n").unwrap();
        assert_eq!(g, Graph::cycle(7));
        assert!((0..7).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        let err = parse_edge_list("2\n0 0").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { location: "line 2".into(), message: "loop at vertex 0".into() }
        );
        assert!(matches!(parse_edge_list("2\n0 2"), Err(Error::Parse { location, .. }) if location == "line 2"));
        assert!(matches!(parse_edge_list("3\n0 1\n1"), Err(Error::Parse { location, .. }) if location == "line 3"));
        assert!(parse_edge_list("x\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // Reference string produced by petgraph for this 5-vertex graph.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn graph6_long_form() {
        let g = Graph::cycle(63);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors_report_offset() {
        assert!(matches!(parse_graph6("C"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Parse { .. })));
        let err = parse_graph6("C\u{1}").unwrap_err();
        assert!(matches!(err, Error::Parse { location, .. } if location == "offset 1"));
    }
}
