//! graph6 codec, short form (order 1..=62).
//!
//! Wire layout: one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix read column by column (bit a(0,1), a(0,2), a(1,2),
//! a(0,3), ...), packed big-endian into 6-bit groups, each emitted as
//! `group + 63`. Padding bits must be zero.

use super::{FormatError, Graph};

const OFFSET: u8 = 63;

/// Decodes one graph6 line. An optional `>>graph6<<` prefix is accepted;
/// offsets in errors count bytes of the input as given.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let line = text.trim_end_matches(['\r', '\n']);
    let (bytes, skip) = match line.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), ">>graph6<<".len()),
        None => (line.as_bytes(), 0),
    };
    let at = |i: usize| i + skip;
    if bytes.is_empty() {
        return Err(FormatError::Graph6Empty);
    }
    let header = bytes[0];
    if !(OFFSET..=126).contains(&header) {
        return Err(FormatError::Graph6InvalidChar {
            offset: at(0),
            byte: header,
        });
    }
    let n = (header - OFFSET) as usize;
    if n == 0 || header == 126 {
        // 126 opens the multi-byte long form for n > 62.
        return Err(FormatError::Graph6UnsupportedOrder { offset: at(0), n });
    }

    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(FormatError::Graph6Length {
            offset: at(1 + data.len().min(expected)),
            expected,
            found: data.len(),
        });
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for (k, &b) in data.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(FormatError::Graph6InvalidChar {
                offset: at(1 + k),
                byte: b,
            });
        }
        let group = b - OFFSET;
        for shift in (0..6).rev() {
            let bit = (group >> shift) & 1;
            if bit_index >= bit_count {
                if bit == 1 {
                    return Err(FormatError::Graph6TrailingBits { offset: at(1 + k) });
                }
                continue;
            }
            if bit == 1 {
                let (i, j) = triangle_position(bit_index);
                // graph6 vertices are 0-based; labels are 1-based.
                edges.push((i + 1, j + 1));
            }
            bit_index += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range"))
}

/// Maps a flat upper-triangle bit index to its (row, column) pair, column
/// major: indices 0, 1, 2, 3, ... are (0,1), (0,2), (1,2), (0,3), ...
fn triangle_position(index: usize) -> (usize, usize) {
    let mut j = 1usize;
    let mut base = 0usize;
    while base + j <= index {
        base += j;
        j += 1;
    }
    (index - base, j)
}

/// Encodes a graph as one graph6 line (no trailing newline).
///
/// # Panics
/// Panics for orders above 62; the short form is all this toolkit needs.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= 62, "graph6 short form carries n <= 62, got {n}");
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 2..=n {
        for i in 1..j {
            bits.push(g.has_edge(i, j));
        }
    }
    let mut out = String::new();
    out.push((n as u8 + OFFSET) as char);
    for chunk in bits.chunks(6) {
        let mut group = 0u8;
        for (pos, &bit) in chunk.iter().enumerate() {
            if bit {
                group |= 1 << (5 - pos);
            }
        }
        out.push((group + OFFSET) as char);
    }
    out
}
