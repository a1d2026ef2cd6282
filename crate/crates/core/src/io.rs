//! graph6 and plain edge-list codecs.
//!
//! graph6: a size prefix (one byte `n + 63` for `n <= 62`, or `126` followed
//! by three bytes of 6 bits each for `63 <= n <= 258047`), then the upper
//! triangle of the adjacency matrix in column order `(0,1), (0,2), (1,2),
//! (0,3), ...`, packed big-endian 6 bits per byte, each byte offset by 63.
//! Padding bits in the last byte are zero.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based
//! vertices.

use std::collections::HashSet;
use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const GRAPH6_MAX_ORDER: usize = 258_047;
const GRAPH6_HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    MissingSize,
    #[error("byte {byte} at offset {offset} is outside 63..=126")]
    BadChecksumByte { offset: usize, byte: u8 },
    #[error("graph6 body too short: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("graph6 line has trailing data or nonzero padding bits")]
    TrailingGarbage,
    #[error("order {0} exceeds the supported graph6 range (max {GRAPH6_MAX_ORDER})")]
    TooLarge(usize),
}

fn sextet(line: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match line.get(offset) {
        Some(&byte) if (63..=126).contains(&byte) => Ok(byte - 63),
        Some(&byte) => Err(Graph6Error::BadChecksumByte { offset, byte }),
        None => Err(Graph6Error::MissingSize),
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let mut line = line;
    while let [rest @ .., b'\n' | b'\r'] = line {
        line = rest;
    }
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    if line.is_empty() {
        return Err(Graph6Error::MissingSize);
    }
    let (n, start) = if line[0] == 126 {
        if line.get(1) == Some(&126) {
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        if line.len() < 4 {
            return Err(Graph6Error::TruncatedBody { expected: 3, found: line.len() - 1 });
        }
        let mut n = 0usize;
        for offset in 1..4 {
            n = (n << 6) | sextet(line, offset)? as usize;
        }
        (n, 4)
    } else {
        (sextet(line, 0)? as usize, 1)
    };

    let body = &line[start..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBody { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage);
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    for (k, _) in body.iter().enumerate() {
        let bits = sextet(body, k).map_err(|e| match e {
            Graph6Error::BadChecksumByte { byte, .. } => {
                Graph6Error::BadChecksumByte { offset: start + k, byte }
            }
            other => other,
        })?;
        for shift in (0..6).rev() {
            let bit_index = 6 * k + (5 - shift);
            let set = (bits >> shift) & 1 == 1;
            if bit_index >= total_bits {
                if set {
                    return Err(Graph6Error::TrailingGarbage);
                }
                continue;
            }
            if set {
                edges.push((i, j));
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(Graph::from_normalized(n, edges))
}

pub fn write_graph6(g: &Graph) -> Result<Vec<u8>, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u8; body_len(n)];
    for &(u, v) in g.edges() {
        // column-order index of (u, v), u < v
        let idx = v * (v - 1) / 2 + u;
        bits[idx / 6] |= 1 << (5 - idx % 6);
    }
    debug_assert!(total_bits.div_ceil(6) == bits.len());
    out.extend(bits.iter().map(|b| b + 63));
    Ok(out)
}

/// One decoded line of a graph6 corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Record {
    /// 1-based line number in the source.
    pub line_no: usize,
    pub raw: Vec<u8>,
    pub graph: Graph,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Streams graph6 records from newline-delimited input, skipping blank
/// lines.
pub struct Graph6Reader<R> {
    input: R,
    line_no: usize,
    buf: Vec<u8>,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(input: R) -> Self {
        Self { input, line_no: 0, buf: Vec::new() }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<Graph6Record, CorpusError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.input.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line_no += 1;
            let raw: Vec<u8> = self.buf.trim_ascii_end().to_vec();
            if raw.is_empty() {
                continue;
            }
            let line = self.line_no;
            return Some(
                parse_graph6(&raw)
                    .map(|graph| Graph6Record { line_no: line, raw, graph })
                    .map_err(|source| CorpusError::Graph6 { line, source }),
            );
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

fn syntax(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Syntax { line, message: message.into() }
}

fn two_numbers(text: &str, line: usize) -> Result<(usize, usize), EdgeListError> {
    let mut it = text.split_whitespace();
    let parse = |tok: Option<&str>| -> Result<usize, EdgeListError> {
        let tok = tok.ok_or_else(|| syntax(line, "expected two integers"))?;
        tok.parse().map_err(|_| syntax(line, format!("not a nonnegative integer: {tok:?}")))
    };
    let pair = (parse(it.next())?, parse(it.next())?);
    if it.next().is_some() {
        return Err(syntax(line, "expected exactly two integers"));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (header_line, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| syntax(1, "missing \"n m\" header"))?;
    let (n, m) = two_numbers(header, header_line)?;

    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        if body.is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(syntax(line, format!("more than the {m} edges declared in the header")));
        }
        let (u, v) = two_numbers(body, line)?;
        let err = |source| EdgeListError::Graph { line, source };
        if u >= n || v >= n {
            return Err(err(GraphError::VertexOutOfRange(u, v, n)));
        }
        if u == v {
            return Err(err(GraphError::SelfLoop(u)));
        }
        let pair = (u.min(v), u.max(v));
        if !seen.insert(pair) {
            return Err(err(GraphError::DuplicateEdge(u, v)));
        }
        edges.push(pair);
    }
    if edges.len() < m {
        return Err(syntax(
            last_line,
            format!("header declares {m} edges but only {} were given", edges.len()),
        ));
    }
    Ok(Graph::from_normalized(n, edges))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
