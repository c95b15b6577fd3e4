//! graph6 encoding for graphs on at most 62 vertices.
//!
//! The first byte is `n + 63`. The upper-triangle bits
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` follow, zero-padded to a multiple of
//! six and written six at a time as `value + 63`, most significant bit first.
//! The longer size headers for `n > 62` and sparse6 are not supported.

use thiserror::Error;

use crate::graph::{bit, Graph};

pub const MAX_GRAPH6_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6 supports at most {MAX_GRAPH6_VERTICES} vertices here, got {0}")]
    TooLarge(usize),
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed header byte {0:#04x}")]
    BadHeader(u8),
    #[error("non-printable byte {byte:#04x} at offset {offset}")]
    NonPrintable { byte: u8, offset: usize },
    #[error("insufficient bit groups: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage: {0} unexpected bytes after the adjacency data")]
    TrailingGarbage(usize),
    #[error("nonzero padding bits in the last data byte")]
    NonzeroPadding,
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    let (&head, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Graph6Error::NonPrintable { byte, offset });
    }
    if head == 126 {
        return Err(Graph6Error::BadHeader(head));
    }
    let n = (head - 63) as usize;
    let expected = data_len(n);
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() });
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingGarbage(data.len() - expected));
    }
    let total = n * n.saturating_sub(1) / 2;
    let bit_at = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total..expected * 6).any(bit_at) {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit_at(k) {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is symmetric and loop-free"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, random_graph};
    use proptest::prelude::*;

    #[test]
    fn hand_encoded_k2() {
        assert_eq!(encode(&complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(decode("A_").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn hand_encoded_edgeless() {
        assert_eq!(encode(&Graph::empty(2).unwrap()).unwrap(), "A?");
        assert_eq!(decode("A?").unwrap(), Graph::empty(2).unwrap());
    }

    #[test]
    fn known_string_from_the_format_description() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
    }

    #[test]
    fn decode_errors() {
        assert_eq!(decode("A"), Err(Graph6Error::Truncated { expected: 1, found: 0 }));
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("A_?"), Err(Graph6Error::TrailingGarbage(1)));
        assert_eq!(decode("A\n"), Err(Graph6Error::NonPrintable { byte: b'\n', offset: 1 }));
        assert_eq!(decode("~??"), Err(Graph6Error::BadHeader(b'~')));
        assert_eq!(decode("A@"), Err(Graph6Error::NonzeroPadding));
    }

    #[test]
    fn too_large() {
        assert_eq!(encode(&Graph::empty(63).unwrap()), Err(Graph6Error::TooLarge(63)));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=30, p in 0.0f64..=1.0, seed in any::<u64>()) {
            let g = random_graph(n, p, seed).unwrap();
            prop_assert_eq!(decode(&encode(&g).unwrap()).unwrap(), g);
        }
    }
}
