//! Standard graph6 encoding (the format used by nauty/geng).
//!
//! Upper-triangle bits are packed column-wise, six per byte, each byte
//! offset by 63. Parse errors report the byte offset of the problem.

use crate::graph::AbstractGraph;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {offset}: invalid graph6 byte 0x{byte:02x}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated input, expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing garbage after graph data")]
    TrailingGarbage { offset: usize },
    #[error("byte {offset}: malformed size header")]
    BadHeader { offset: usize },
    #[error("byte {offset}: nonzero padding bits")]
    BadPadding { offset: usize },
    #[error("graph too large for this implementation (n = {0})")]
    TooLarge(u64),
}

const OPTIONAL_HEADER: &str = ">>graph6<<";

/// Parses a single graph6 line (optionally prefixed with `>>graph6<<`).
pub fn read_graph6(text: &str) -> Result<AbstractGraph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match text.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (rest.as_bytes(), OPTIONAL_HEADER.len()),
        None => (text.as_bytes(), 0),
    };
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }

    let check = |i: usize| -> Result<u64, Graph6Error> {
        let b = bytes[i];
        if !(63..=126).contains(&b) {
            Err(Graph6Error::InvalidByte {
                offset: base + i,
                byte: b,
            })
        } else {
            Ok((b - 63) as u64)
        }
    };

    // size field
    let pos;
    let n: u64 = if bytes[0] != 126 {
        pos = 1;
        check(0)?
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader { offset: base });
        }
        pos = 4;
        (check(1)? << 12) | (check(2)? << 6) | check(3)?
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadHeader { offset: base });
        }
        pos = 8;
        let mut v = 0u64;
        for i in 2..8 {
            v = (v << 6) | check(i)?;
        }
        v
    };
    if n > 100_000 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < pos + nbytes {
        return Err(Graph6Error::Truncated {
            offset: base + bytes.len(),
            expected: nbytes,
        });
    }
    if bytes.len() > pos + nbytes {
        return Err(Graph6Error::TrailingGarbage {
            offset: base + pos + nbytes,
        });
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = check(pos + bit_index / 6)?;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == nbits {
                break 'outer;
            }
        }
    }
    // padding bits after the triangle must be zero
    if !nbits.is_multiple_of(6) {
        let last = check(pos + nbytes - 1)?;
        let pad = nbytes * 6 - nbits;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::BadPadding {
                offset: base + pos + nbytes - 1,
            });
        }
    }

    Ok(AbstractGraph::from_edges(n, &edges).expect("graph6 bits are loop-free and in range"))
}

/// Encodes a graph in standard graph6.
pub fn write_graph6(g: &AbstractGraph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..36).step_by(6).rev() {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(63 + acc);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_is_c_tilde() {
        let g = read_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(write_graph6(&g), "C~");
    }

    #[test]
    fn petgraph_example() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = AbstractGraph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn truncated_reports_offset() {
        let err = read_graph6("D").unwrap_err();
        assert!(matches!(err, Graph6Error::Truncated { .. }));
    }

    #[test]
    fn trailing_garbage_detected() {
        let err = read_graph6("C~C~").unwrap_err();
        assert!(matches!(err, Graph6Error::TrailingGarbage { offset: 2 }));
    }

    #[test]
    fn header_accepted() {
        let g = read_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.n(), 4);
    }

    #[test]
    fn bad_byte_offset() {
        let err = read_graph6("C\x1f").unwrap_err();
        assert_eq!(
            err,
            Graph6Error::InvalidByte {
                offset: 1,
                byte: 0x1f
            }
        );
    }

    #[test]
    fn empty_graph_roundtrip() {
        for n in 0..5 {
            let g = AbstractGraph::empty(n);
            let s = write_graph6(&g);
            let h = read_graph6(&s).unwrap();
            assert_eq!(g, h);
        }
    }

    #[test]
    fn large_n_header() {
        let g = AbstractGraph::empty(100);
        let s = write_graph6(&g);
        let h = read_graph6(&s).unwrap();
        assert_eq!(h.n(), 100);
    }
}
