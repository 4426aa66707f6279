//! graph6 text encoding.
//!
//! Supports orders up to 62 (single-byte header) and the four-byte header
//! form for 63 and 64 vertices.

use super::{Graph, GraphError, Result, MAX_VERTICES};

fn push_order(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 63) as u8) as char);
        }
    }
}

/// graph6 string of `g` (no trailing newline).
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    out
}

fn err(msg: impl Into<String>) -> GraphError {
    GraphError::Graph6(msg.into())
}

/// Parses one graph6 string; surrounding whitespace is ignored.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b} outside the printable range 63..=126")));
    }
    let (n, body) = match bytes.first() {
        None => return Err(err("empty input")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(err("orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(err("truncated header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[4..])
        }
        Some(&b) => ((b - 63) as usize, &bytes[1..]),
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let total = n * n.saturating_sub(1) / 2;
    let want = total.div_ceil(6);
    if body.len() != want {
        return Err(err(format!(
            "expected {want} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total..want * 6).any(bit) {
        return Err(err("nonzero padding bits"));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_masks(adj))
}

/// Decodes one graph per non-empty line.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(graph6_decode)
        .collect()
}
