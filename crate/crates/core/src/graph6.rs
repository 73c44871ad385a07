//! The graph6 text encoding for simple undirected graphs.
//!
//! A graph6 line is a size header followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte with the most significant bit first, zero padded,
//! and offset by 63 into printable ASCII.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;
const LONG_HEADER: u8 = 126;

/// Optional file header written by some generators.
pub const FILE_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// Header byte is not a printable graph6 size byte.
    InvalidHeader(u8),
    /// Order encodes 0 or exceeds the supported maximum.
    UnsupportedOrder(usize),
    /// Fewer payload bytes than the order requires.
    Truncated {
        expected: usize,
        found: usize,
    },
    /// Bytes after the payload.
    TrailingBytes {
        count: usize,
    },
    /// Payload byte outside `63..=126`.
    InvalidByte(u8),
    /// Padding bits in the last payload byte are not zero.
    NonZeroPadding,
}

/// Parse failure with the byte offset it was detected at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph6 byte {}: ", self.offset)?;
        match &self.kind {
            Graph6ErrorKind::Empty => write!(f, "empty input"),
            Graph6ErrorKind::InvalidHeader(b) => write!(f, "invalid header byte 0x{b:02x}"),
            Graph6ErrorKind::UnsupportedOrder(n) => {
                write!(f, "order {n} outside supported range 1..={MAX_ORDER}")
            }
            Graph6ErrorKind::Truncated { expected, found } => write!(
                f,
                "truncated bit vector: expected {expected} payload bytes, found {found}"
            ),
            Graph6ErrorKind::TrailingBytes { count } => {
                write!(f, "{count} trailing byte(s) after payload")
            }
            Graph6ErrorKind::InvalidByte(b) => write!(f, "invalid payload byte 0x{b:02x}"),
            Graph6ErrorKind::NonZeroPadding => write!(f, "non-zero padding bits"),
        }
    }
}

impl core::error::Error for Graph6Error {}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` is tolerated, as is the
/// `>>graph6<<` prefix.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let (base, text) = match text.strip_prefix(FILE_HEADER) {
        Some(rest) => (FILE_HEADER.len(), rest),
        None => (0, text),
    };
    let bytes = text.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(err(base, Graph6ErrorKind::Empty));
    };
    if !(OFFSET..=LONG_HEADER).contains(&first) {
        return Err(err(base, Graph6ErrorKind::InvalidHeader(first)));
    }
    let (n, header_len) = if first == LONG_HEADER {
        if bytes.len() < 4 {
            return Err(err(
                base + bytes.len(),
                Graph6ErrorKind::Truncated {
                    expected: 3,
                    found: bytes.len() - 1,
                },
            ));
        }
        if bytes[1] == LONG_HEADER {
            return Err(err(base + 1, Graph6ErrorKind::InvalidHeader(bytes[1])));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(OFFSET..=LONG_HEADER).contains(&b) {
                return Err(err(base + 1 + i, Graph6ErrorKind::InvalidHeader(b)));
            }
            n = (n << 6) | usize::from(b - OFFSET);
        }
        (n, 4)
    } else {
        (usize::from(first - OFFSET), 1)
    };
    if n == 0 || n > MAX_ORDER {
        return Err(err(base, Graph6ErrorKind::UnsupportedOrder(n)));
    }

    let expected = payload_len(n);
    let payload = &bytes[header_len..];
    if payload.len() < expected {
        return Err(err(
            base + bytes.len(),
            Graph6ErrorKind::Truncated {
                expected,
                found: payload.len(),
            },
        ));
    }
    if payload.len() > expected {
        return Err(err(
            base + header_len + expected,
            Graph6ErrorKind::TrailingBytes {
                count: payload.len() - expected,
            },
        ));
    }
    for (i, &b) in payload.iter().enumerate() {
        if !(OFFSET..=LONG_HEADER).contains(&b) {
            return Err(err(base + header_len + i, Graph6ErrorKind::InvalidByte(b)));
        }
    }

    let total_bits = n * (n - 1) / 2;
    let bit = |k: usize| (payload[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    let mut rows = alloc::vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if (total_bits..expected * 6).any(bit) {
        return Err(err(
            base + header_len + expected - 1,
            Graph6ErrorKind::NonZeroPadding,
        ));
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Encodes a graph as a graph6 line (without newline).
pub fn emit_graph6(g: &Graph) -> String {
    let bytes = emit_graph6_bytes(g);
    // All bytes are in 63..=126.
    String::from_utf8(bytes).expect("graph6 output is ASCII")
}

pub(crate) fn emit_graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + payload_len(n.max(1)));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let column = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | ((column >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    out
}
