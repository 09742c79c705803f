//! The graph6 format: a size header followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: u64 = 1 << 20;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b:#04x} outside the printable range")));
    }
    let (n, data) = match bytes {
        [] => return Err(err("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err("truncated size header"));
            }
            (decode_size(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated size header"));
            }
            (decode_size(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => (u64::from(b - 63), rest),
    };
    if n > MAX_ORDER {
        return Err(err(format!(
            "order {n} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if data.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for order {n}, found {}",
            data.len()
        )));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(err("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}

fn decode_size(chunk: &[u8]) -> u64 {
    chunk
        .iter()
        .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63))
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.order(), k4.edge_count()), (4, 6));
        let k2 = parse_graph6(">>graph6<<A_\n").unwrap();
        assert!(k2.has_edge(0, 1));
        let empty = parse_graph6("C?").unwrap();
        assert_eq!((empty.order(), empty.edge_count()), (4, 0));
        assert_eq!(to_graph6(&k4), "C~");
        assert_eq!(to_graph6(&k2), "A_");
    }

    #[test]
    fn malformed_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        // K2 with a stray padding bit
        assert!(parse_graph6("A`").is_err());
        assert!(parse_graph6("~??").is_err());
        assert!(parse_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn long_header_round_trip() {
        let n = 70;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::new(n as usize, &edges).unwrap();
        let text = to_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}
