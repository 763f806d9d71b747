use crate::error::{Error, Result};

use super::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 word. Trailing whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (base, body) = match text.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, text),
    };
    let bytes = body.trim_end().as_bytes();
    let err = |at: usize, message: String| Error::Parse { offset: base + at, message };

    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, format!("byte 0x{b:02x} outside the graph6 range 63..=126")));
        }
    }

    let (n, mut pos) = match bytes {
        [] => return Err(err(0, "empty input".into())),
        [126, 126, ..] => return Err(err(1, "orders above 258047 are not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(bytes.len(), "truncated long-form order".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = pos + nbits.div_ceil(6);
    if bytes.len() != expected {
        let at = bytes.len().min(expected);
        return Err(err(at, format!("expected {expected} bytes for n={n}, found {}", bytes.len())));
    }

    let mut g = Graph::empty(n)?;
    let mut chunk = 0u8;
    let mut left = 0;
    for v in 1..n {
        for u in 0..v {
            if left == 0 {
                chunk = bytes[pos] - 63;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if chunk >> left & 1 == 1 {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 word (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            chunk = chunk << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
