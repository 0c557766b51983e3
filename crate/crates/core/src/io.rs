//! Text codecs: graph6 (the primary interchange format), DIMACS `.col`, and
//! plain edge lists.
//!
//! graph6 layout for `n <= 62`: the first byte is `63 + n`; the remaining
//! bytes carry the upper triangle of the adjacency matrix read column by
//! column (`a(0,1), a(0,2), a(1,2), a(0,3), ...`), padded with 0-bits to a
//! multiple of 6, each 6-bit group stored MSB-first as `value + 63`. The
//! decoder rejects nonzero padding bits rather than ignoring them: they are a
//! reliable sign of truncation or corruption.

use crate::graph::Graph;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodecError {
    #[error("graph6: empty record")]
    Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} outside printable range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6: record carries {got} adjacency bytes, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("graph6: nonzero padding bits in byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("graph6: {n} vertices does not fit the 62-vertex single-byte header")]
    TooManyVertices { n: usize },
    #[error("graph6: multi-byte length headers (leading '~') are not supported")]
    LongFormUnsupported,
    #[error("dimacs: missing 'p edge <n> <m>' header")]
    MissingHeader,
    #[error("dimacs: line {line}: {msg}")]
    BadLine { line: usize, msg: String },
    #[error("dimacs: line {line}: vertex {vertex} out of range 1..={n}")]
    IndexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge list: line {line}: {msg}")]
    BadEdgeLine { line: usize, msg: String },
    #[error("edge list: missing 'n=<k>' first line")]
    MissingCount,
}

/// The interchange formats the CLI understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Dimacs,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(format!(
                "unknown format '{other}' (expected graph6, dimacs, or edge-list)"
            )),
        }
    }
}

/// Decodes one graph6 record. A standard `>>graph6<<` prefix is tolerated.
pub fn decode_graph6(line: &str) -> Result<Graph, CodecError> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let (&first, rest) = bytes.split_first().ok_or(CodecError::Empty)?;
    if first == 126 {
        return Err(CodecError::LongFormUnsupported);
    }
    if !(63..=126).contains(&first) {
        return Err(CodecError::ByteOutOfRange {
            offset: 0,
            byte: first,
        });
    }
    let n = (first - 63) as usize;

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(CodecError::BadLength {
            expected,
            got: rest.len(),
        });
    }

    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for (k, &b) in rest.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(CodecError::ByteOutOfRange {
                offset: k + 1,
                byte: b,
            });
        }
        let val = b - 63;
        for shift in (0..6).rev() {
            let bit = (val >> shift) & 1;
            if bit_index < nbits {
                let (i, j) = pairs.next().expect("pair stream matches bit count");
                if bit == 1 {
                    g.set_edge(i, j);
                }
            } else if bit == 1 {
                return Err(CodecError::NonzeroPadding { offset: k + 1 });
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 record. Only the single-byte header
/// (`n <= 62`) is supported; larger graphs are refused.
pub fn encode_graph6(g: &Graph) -> Result<String, CodecError> {
    let n = g.n();
    if n > 62 {
        return Err(CodecError::TooManyVertices { n });
    }
    let mut out = String::new();
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push((acc + 63) as char);
    }
    Ok(out)
}

/// A decoded DIMACS graph plus any non-fatal oddities found on the way
/// (duplicate edges, header/edge-count mismatch).
#[derive(Debug, Clone)]
pub struct DimacsDecoded {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

/// Parses DIMACS `.col` text: a `p edge <n> <m>` header, `e <u> <v>` lines
/// with 1-indexed endpoints, and `c` comment lines. Duplicate edges are
/// deduplicated with a warning.
pub fn decode_dimacs(text: &str) -> Result<DimacsDecoded, CodecError> {
    let mut graph: Option<Graph> = None;
    let mut warnings = Vec::new();
    let mut declared_edges = 0usize;
    let mut seen_edges = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(CodecError::BadLine {
                        line: line_no,
                        msg: "duplicate 'p' header".into(),
                    });
                }
                if parts.next() != Some("edge") {
                    return Err(CodecError::BadLine {
                        line: line_no,
                        msg: "expected 'p edge <n> <m>'".into(),
                    });
                }
                let n: usize = parse_field(&mut parts, line_no, "vertex count")?;
                declared_edges = parse_field(&mut parts, line_no, "edge count")?;
                graph = Some(Graph::empty(n));
            }
            Some("e") => {
                let g = graph.as_mut().ok_or(CodecError::MissingHeader)?;
                let u: usize = parse_field(&mut parts, line_no, "endpoint")?;
                let v: usize = parse_field(&mut parts, line_no, "endpoint")?;
                let n = g.n();
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(CodecError::IndexOutOfRange {
                            line: line_no,
                            vertex: w,
                            n,
                        });
                    }
                }
                if u == v {
                    return Err(CodecError::BadLine {
                        line: line_no,
                        msg: format!("self-loop at vertex {u}"),
                    });
                }
                if g.has_edge(u - 1, v - 1) {
                    warnings.push(format!("line {line_no}: duplicate edge {u} {v} ignored"));
                } else {
                    g.set_edge(u - 1, v - 1);
                    seen_edges += 1;
                }
            }
            Some(other) => {
                return Err(CodecError::BadLine {
                    line: line_no,
                    msg: format!("unknown record type '{other}'"),
                });
            }
            None => unreachable!("blank lines are filtered above"),
        }
    }

    let graph = graph.ok_or(CodecError::MissingHeader)?;
    if seen_edges != declared_edges {
        warnings.push(format!(
            "header declared {declared_edges} edges, found {seen_edges}"
        ));
    }
    Ok(DimacsDecoded { graph, warnings })
}

fn parse_field<'a, I: Iterator<Item = &'a str>>(
    parts: &mut I,
    line: usize,
    what: &str,
) -> Result<usize, CodecError> {
    parts
        .next()
        .ok_or_else(|| CodecError::BadLine {
            line,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| CodecError::BadLine {
            line,
            msg: format!("malformed {what}"),
        })
}

/// Emits DIMACS `.col` text with edges in lexicographic order.
pub fn encode_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses a plain edge list: `n=<k>` on the first line, then one 0-indexed
/// `u v` pair per line.
pub fn decode_edge_list(text: &str) -> Result<Graph, CodecError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(CodecError::MissingCount)?;
    let n: usize = header
        .trim()
        .strip_prefix("n=")
        .ok_or(CodecError::MissingCount)?
        .parse()
        .map_err(|_| CodecError::MissingCount)?;
    let mut edges = Vec::new();
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let mut parts = raw.split_whitespace();
        let parse = |s: Option<&str>| -> Result<usize, CodecError> {
            s.ok_or_else(|| CodecError::BadEdgeLine {
                line: line_no,
                msg: "expected 'u v'".into(),
            })?
            .parse()
            .map_err(|_| CodecError::BadEdgeLine {
                line: line_no,
                msg: "malformed vertex id".into(),
            })
        };
        let u = parse(parts.next())?;
        let v = parse(parts.next())?;
        if parts.next().is_some() {
            return Err(CodecError::BadEdgeLine {
                line: line_no,
                msg: "trailing tokens".into(),
            });
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).map_err(|e| CodecError::BadEdgeLine {
        line: 0,
        msg: e.to_string(),
    })
}

/// Emits the edge-list format.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Decodes `text` according to `format`.
pub fn decode(format: GraphFormat, text: &str) -> Result<Graph, CodecError> {
    match format {
        GraphFormat::Graph6 => decode_graph6(text),
        GraphFormat::Dimacs => decode_dimacs(text).map(|d| d.graph),
        GraphFormat::EdgeList => decode_edge_list(text),
    }
}

/// Encodes `g` according to `format`.
pub fn encode(format: GraphFormat, g: &Graph) -> Result<String, CodecError> {
    match format {
        GraphFormat::Graph6 => encode_graph6(g),
        GraphFormat::Dimacs => Ok(encode_dimacs(g)),
        GraphFormat::EdgeList => Ok(encode_edge_list(g)),
    }
}
