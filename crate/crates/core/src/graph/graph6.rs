//! graph6 encoding (header-free): a size prefix followed by the upper
//! triangle of the adjacency matrix, column by column, packed six bits per
//! printable byte with offset 63.

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const MAX_N: usize = 68_719_476_735;

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = encode_size(n);
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![false; total];
    for &(i, j) in g.edges() {
        // column-major index of (i, j) with i < j
        bits[j * (j - 1) / 2 + i] = true;
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (pos, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - pos);
            }
        }
        out.push(byte + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn encode_size(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + OFFSET]
    } else if n <= 258_047 {
        let mut v = vec![126];
        v.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 0x3f) as u8 + OFFSET));
        v
    } else {
        assert!(n <= MAX_N, "graph too large for graph6");
        let mut v = vec![126, 126];
        v.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 0x3f) as u8 + OFFSET));
        v
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        Some(&b) if (OFFSET..=126).contains(&b) => Ok(b - OFFSET),
        Some(&b) => Err(Error::Graph6 {
            offset,
            reason: format!("byte 0x{b:02x} outside the printable range 63..=126"),
        }),
        None => Err(Error::Graph6 {
            offset,
            reason: "unexpected end of input".into(),
        }),
    }
}

/// Decodes one graph6 record. A single trailing newline is tolerated.
pub fn graph6_decode(input: &[u8]) -> Result<Graph> {
    let bytes = input
        .strip_suffix(b"\n")
        .map(|b| b.strip_suffix(b"\r").unwrap_or(b))
        .unwrap_or(input);
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: 0,
            reason: "empty input".into(),
        });
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | sextet(bytes, i)? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for i in 2..8 {
            n = n << 6 | sextet(bytes, i)? as usize;
        }
        (n, 8)
    };

    let total = n * n.saturating_sub(1) / 2;
    let expected = pos + total.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::Graph6 {
            offset: bytes.len().min(expected),
            reason: format!(
                "expected {expected} bytes for a {n}-vertex graph, found {}",
                bytes.len()
            ),
        });
    }

    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut index = 0;
    while index < total {
        let chunk = sextet(bytes, pos)?;
        for bit in 0..6 {
            let set = chunk >> (5 - bit) & 1 == 1;
            if index >= total {
                if set {
                    return Err(Error::Graph6 {
                        offset: pos,
                        reason: "nonzero padding bits".into(),
                    });
                }
                continue;
            }
            if set {
                edges.push((i, j));
            }
            index += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, make_theta, ThetaParams};
    use proptest::prelude::*;

    #[test]
    fn empty_five_vertex_graph() {
        assert_eq!(graph6_encode(&Graph::empty(5)), "D??");
        assert_eq!(graph6_decode(b"D??").unwrap(), Graph::empty(5));
    }

    #[test]
    fn known_encodings() {
        // P_2: single bit 1 -> 100000 = 32, +63 = '_'
        assert_eq!(graph6_encode(&make_path(2).unwrap()), "A_");
        // K_3: bits 111 -> 111000 = 56 -> 'w'
        let k3 = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(graph6_encode(&k3), "Bw");
        assert_eq!(graph6_encode(&Graph::empty(0)), "?");
        assert_eq!(graph6_encode(&Graph::empty(1)), "@");
    }

    #[test]
    fn large_size_prefix() {
        let g = Graph::empty(100);
        let s = graph6_encode(&g);
        // 100 = 1 * 64 + 36
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99]);
        assert_eq!(graph6_decode(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn theta_round_trip() {
        let t = make_theta(ThetaParams::new(1, 1, 1).unwrap());
        let back = graph6_decode(graph6_encode(&t).as_bytes()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn rejects_garbage() {
        let err = graph6_decode(b"garbage\xff").unwrap_err();
        assert!(matches!(err, Error::Graph6 { .. }));
        assert!(matches!(
            graph6_decode(b"D?"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            graph6_decode(b"D?\x10"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        // n = 2 has one data bit; the low five bits must be zero
        assert!(matches!(
            graph6_decode(b"A@"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(graph6_decode(b"").is_err());
    }

    #[test]
    fn trailing_newline_tolerated() {
        assert_eq!(graph6_decode(b"Bw\n").unwrap().edge_count(), 3);
    }

    proptest! {
        #[test]
        fn round_trip_small_graphs(n in 0usize..=12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let edges = (0..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| e);
            let g = Graph::new(n, edges).unwrap();
            let s = graph6_encode(&g);
            prop_assert_eq!(graph6_decode(s.as_bytes()).unwrap(), g);
        }
    }
}
