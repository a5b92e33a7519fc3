//! Text codecs for graphs: graph6, plain adjacency lists, and named families.
//!
//! The graph6 codec follows the standard ASCII convention: the order is
//! stored first (bytes offset by 63), then the upper triangle of the
//! adjacency matrix in column-major order, six bits per byte, zero-padded.
//! Decoding is strict — wrong length, out-of-range bytes, and nonzero
//! padding are all rejected with the byte offset of the problem — which
//! makes `encode` and `decode` mutually inverse on their full domains.
//!
//! The adjacency-list format is for hand-written inputs: edges as `u-v`
//! tokens and isolated vertices as bare ids, separated by commas and/or
//! whitespace. `decode` sniffs the format: `K`/`P`/`C` names, then
//! digit-initial adjacency lists, then graph6.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

/// A malformed graph text, with the byte offset where decoding failed.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("{reason} at byte {offset}")]
pub struct ParseError {
    /// Byte offset into the input where the problem was detected.
    pub offset: usize,
    /// Human-readable description of the problem.
    pub reason: String,
}

impl ParseError {
    fn new(offset: usize, reason: impl Into<String>) -> ParseError {
        ParseError {
            offset,
            reason: reason.into(),
        }
    }
}

fn graph_error(offset: usize, err: GraphError) -> ParseError {
    ParseError::new(offset, err.to_string())
}

/// Encode a graph in graph6 format.
///
/// ```
/// use implab::codec::encode_graph6;
/// use implab::graph::Graph;
///
/// assert_eq!(encode_graph6(&Graph::new(0).unwrap()), "?");
/// assert_eq!(encode_graph6(&Graph::star(4).unwrap()), "Ds_");
/// ```
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        // 63 <= n <= 64 in this crate; the three-byte form covers it.
        bytes.push(b'~');
        bytes.push(63 + ((n >> 12) & 0x3f) as u8);
        bytes.push(63 + ((n >> 6) & 0x3f) as u8);
        bytes.push(63 + (n & 0x3f) as u8);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(63 + (group << (6 - filled)));
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decode a graph6 string. The optional `>>graph6<<` header is accepted.
pub fn decode_graph6(text: &str) -> Result<Graph, ParseError> {
    const HEADER: &str = ">>graph6<<";
    let (body, base) = match text.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (text, 0),
    };
    let bytes = body.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::new(base, "empty graph6 text"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::new(base + i, format!("invalid graph6 byte {b:#04x}")));
        }
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(ParseError::new(base, "truncated graph6 order"));
        }
        if bytes[1] == b'~' {
            return Err(ParseError::new(base + 1, "graph6 order beyond supported range"));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(ParseError::new(base, format!("graph order {n} exceeds the supported maximum of {MAX_VERTICES}")));
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() != pos + byte_count {
        return Err(ParseError::new(
            base + bytes.len().min(pos + byte_count),
            format!("graph6 body for order {n} needs {byte_count} bytes, found {}", bytes.len() - pos),
        ));
    }
    let mut g = Graph::new(n).map_err(|e| graph_error(base, e))?;
    let mut group = 0u8;
    let mut remaining = 0u8;
    for j in 1..n {
        for i in 0..j {
            if remaining == 0 {
                group = bytes[pos] - 63;
                remaining = 6;
                pos += 1;
            }
            if group & 0b10_0000 != 0 {
                g.add_edge(i, j).map_err(|e| graph_error(base + pos - 1, e))?;
            }
            group = (group << 1) & 0x3f;
            remaining -= 1;
        }
    }
    if remaining > 0 && group != 0 {
        return Err(ParseError::new(base + pos - 1, "nonzero padding bits in graph6 text"));
    }
    Ok(g)
}

/// Encode as an adjacency list: `u-v` per edge, bare ids for isolated
/// vertices, comma-separated. The empty graph encodes as the empty string.
pub fn encode_adjacency_list(g: &Graph) -> String {
    let mut parts: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    for v in g.vertices() {
        if g.degree(v) == 0 {
            parts.push(v.to_string());
        }
    }
    parts.join(",")
}

/// Decode an adjacency list. The order is one more than the largest id
/// mentioned; whitespace and commas both separate tokens.
///
/// ```
/// use implab::codec::decode_adjacency_list;
///
/// let p3 = decode_adjacency_list("0-1, 1-2").unwrap();
/// assert_eq!(p3.order(), 3);
/// assert_eq!(p3.edge_count(), 2);
/// ```
pub fn decode_adjacency_list(text: &str) -> Result<Graph, ParseError> {
    struct Token {
        offset: usize,
        first: usize,
        second: Option<usize>,
    }

    let mut tokens: Vec<Token> = Vec::new();
    let mut max_vertex = None::<usize>;
    let mut offset = 0;
    for raw in text.split_inclusive([',', '\n']) {
        let body = raw.trim_end_matches([',', '\n']);
        let token = body.trim();
        if !token.is_empty() {
            let token_offset = offset + (token.as_ptr() as usize - raw.as_ptr() as usize);
            let parse_id = |part: &str| -> Result<usize, ParseError> {
                let id_offset = token_offset + (part.as_ptr() as usize - token.as_ptr() as usize);
                part.parse::<usize>()
                    .map_err(|_| ParseError::new(id_offset, format!("expected a vertex id, found {part:?}")))
            };
            let (first, second) = match token.split_once('-') {
                Some((a, b)) => (parse_id(a)?, Some(parse_id(b)?)),
                None => (parse_id(token)?, None),
            };
            for v in std::iter::once(first).chain(second) {
                if v >= MAX_VERTICES {
                    return Err(ParseError::new(
                        token_offset,
                        format!("vertex {v} exceeds the supported maximum id {}", MAX_VERTICES - 1),
                    ));
                }
                max_vertex = Some(max_vertex.map_or(v, |m: usize| m.max(v)));
            }
            tokens.push(Token {
                offset: token_offset,
                first,
                second,
            });
        }
        offset += raw.len();
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    let mut g = Graph::new(n).map_err(|e| graph_error(0, e))?;
    for token in tokens {
        if let Some(second) = token.second {
            g.add_edge(token.first, second).map_err(|e| graph_error(token.offset, e))?;
        }
    }
    Ok(g)
}

/// Parse a named graph family: `Kn`, `Pn`, `Cn`, or `Ka,b` (complete
/// bipartite; `K1,m` is the star). Returns `None` when the text is not a
/// name, and an error for names with out-of-range parameters.
pub fn parse_named(name: &str) -> Option<Result<Graph, ParseError>> {
    let name = name.trim();
    let rest = name.strip_prefix(['K', 'P', 'C'])?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit() || b == b',') {
        return None;
    }
    let build = || -> Result<Graph, ParseError> {
        let bad_order = |e: GraphError| ParseError::new(0, e.to_string());
        match (name.as_bytes()[0], rest.split_once(',')) {
            (b'K', Some((a, b))) => {
                let parse = |part: &str| {
                    part.parse::<usize>()
                        .map_err(|_| ParseError::new(0, format!("malformed graph name {name:?}")))
                };
                Graph::complete_bipartite(parse(a)?, parse(b)?).map_err(bad_order)
            }
            (_, Some(_)) => Err(ParseError::new(0, format!("malformed graph name {name:?}"))),
            (prefix, None) => {
                let n = rest
                    .parse::<usize>()
                    .map_err(|_| ParseError::new(0, format!("malformed graph name {name:?}")))?;
                match prefix {
                    b'K' => Graph::complete(n).map_err(bad_order),
                    b'P' => Graph::path(n).map_err(bad_order),
                    _ => {
                        if n < 3 {
                            Err(ParseError::new(0, format!("cycle C{n} needs at least 3 vertices")))
                        } else {
                            Graph::cycle(n).map_err(bad_order)
                        }
                    }
                }
            }
        }
    };
    Some(build())
}

/// Decode any supported graph text: a named family, an adjacency list
/// (digit-initial), or graph6.
pub fn decode(text: &str) -> Result<Graph, ParseError> {
    let trimmed = text.trim();
    if let Some(named) = parse_named(trimmed) {
        return named;
    }
    match trimmed.bytes().next() {
        Some(b) if b.is_ascii_digit() => decode_adjacency_list(text),
        _ => decode_graph6(trimmed),
    }
}
