//! The short form of the graph6 format (orders up to 62).

use std::io::BufRead;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order expressible in the short form.
pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Graph6(format!(
            "order {n} needs the long form, which is not supported"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let (mut acc, mut nbits) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.are_adjacent(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    Ok(out)
}

pub fn read_graph6(bytes: &[u8]) -> Result<Graph> {
    let text = bytes.trim_ascii();
    let text = text.strip_prefix(HEADER.as_bytes()).unwrap_or(text);
    let (&first, body) = text
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if first == 126 {
        return Err(Error::Graph6(
            "long form (order above 62) is not supported".into(),
        ));
    }
    if !(63..126).contains(&first) {
        return Err(Error::Graph6(format!("invalid order byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::Graph6("order 0 graph".into()));
    }
    let bits = n * (n - 1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Graph6(format!(
            "expected {} adjacency bytes for order {n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("invalid adjacency byte {b:#04x}")));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut rows = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}

/// Newline-delimited graph6, one graph per non-blank line. Errors name the
/// 1-based line number.
pub fn read_graph6_stream<R: BufRead>(source: R) -> impl Iterator<Item = Result<Graph>> {
    source
        .split(b'\n')
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::Graph6(format!("line {}: {e}", i + 1)))),
            Ok(line) if line.trim_ascii().is_empty() => None,
            Ok(line) => Some(read_graph6(&line).map_err(|e| match e {
                Error::Graph6(msg) => Error::Graph6(format!("line {}: {msg}", i + 1)),
                other => other,
            })),
        })
}
