//! graph6 encoding: an order header followed by the upper triangle of the
//! adjacency matrix in column-major order, six bits per printable byte
//! (value + 63), zero padded.

use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed header")]
    MalformedHeader,
    #[error("payload has {got} bytes, expected {expected}")]
    TruncatedPayload { expected: usize, got: usize },
    #[error("payload has {got} bytes, expected {expected}")]
    TrailingData { expected: usize, got: usize },
    #[error("byte {0:#04x} outside the printable range 63..=126")]
    InvalidByte(u8),
    #[error("padding bits are not zero")]
    NonCanonicalPadding,
}

const MAX_ORDER: usize = (1 << 36) - 1;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        assert!(n <= MAX_ORDER, "graph6 cannot encode order {n}");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let sextet = |b: u8| -> Result<usize, Graph6Error> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as usize)
        } else {
            Err(Graph6Error::InvalidByte(b))
        }
    };
    let read = |bytes: &[u8]| -> Result<usize, Graph6Error> {
        bytes
            .iter()
            .try_fold(0, |acc, &b| Ok(acc << 6 | sextet(b)?))
    };
    match bytes {
        [] => Err(Graph6Error::MalformedHeader),
        [126, 126, rest @ ..] => {
            let n = read(rest.get(..6).ok_or(Graph6Error::MalformedHeader)?)?;
            if n <= 258_047 {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, 8))
        }
        [126, rest @ ..] => {
            let n = read(rest.get(..3).ok_or(Graph6Error::MalformedHeader)?)?;
            if n <= 62 {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok((n, 4))
        }
        [b, ..] => Ok((sextet(*b).map_err(|_| Graph6Error::MalformedHeader)?, 1)),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (n, header) = decode_order(bytes)?;
    let payload = &bytes[header..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() < expected {
        return Err(Graph6Error::TruncatedPayload {
            expected,
            got: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData {
            expected,
            got: payload.len(),
        });
    }
    if let Some(&b) = payload.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Graph6Error::InvalidByte(b));
    }
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let pad = expected * 6 - bits;
    if (bits..bits + pad).any(bit) {
        return Err(Graph6Error::NonCanonicalPadding);
    }
    let mut adj = vec![VertexSet::empty(n); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    /// Straight from the layout description: build the bit string, pad,
    /// cut into sextets.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        assert!(n <= 62);
        let mut bits = String::new();
        for j in 1..n {
            for i in 0..j {
                let e = edges.contains(&(i, j)) || edges.contains(&(j, i));
                bits.push(if e { '1' } else { '0' });
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push('0');
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn fixed_vectors() {
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");
        assert_eq!(reference_encode(1, &[]), "@");
        assert_eq!(to_graph6(&complete(2)), "A_");
        assert_eq!(to_graph6(&complete(1)), "@");
        assert_eq!(to_graph6(&empty_graph(0)), "?");
        assert_eq!(from_graph6("A_").unwrap(), complete(2));
        assert_eq!(from_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn matches_reference_encoder() {
        for g in [petersen(), fig4_graph(), path(7), cycle(13).unwrap()] {
            assert_eq!(to_graph6(&g), reference_encode(g.order(), &g.edges()));
        }
        // 5-vertex graph with edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn long_header() {
        let g = path(100);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert_eq!(from_graph6(""), Err(Graph6Error::MalformedHeader));
        assert_eq!(from_graph6("~?"), Err(Graph6Error::MalformedHeader));
        // n = 3 in long form is not canonical
        assert_eq!(from_graph6("~??B"), Err(Graph6Error::MalformedHeader));
        assert_eq!(
            from_graph6("D"),
            Err(Graph6Error::TruncatedPayload {
                expected: 2,
                got: 0
            })
        );
        assert_eq!(
            from_graph6("A__"),
            Err(Graph6Error::TrailingData {
                expected: 1,
                got: 2
            })
        );
        // K2 with a stray pad bit set
        assert_eq!(from_graph6("A`"), Err(Graph6Error::NonCanonicalPadding));
        assert_eq!(from_graph6("A "), Err(Graph6Error::InvalidByte(b' ')));
    }

    #[test]
    fn petersen_round_trip() {
        let p = petersen();
        assert_eq!(from_graph6(&to_graph6(&p)).unwrap(), p);
    }
}
