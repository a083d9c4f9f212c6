//! graph6 encoding (size byte, then the upper triangle in column-major order,
//! six bits per byte, each offset by 63).

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn graph6_decode(line: &str) -> Result<Graph> {
    let body = line.trim_end_matches(['\n', '\r']);
    let body = body.strip_prefix(HEADER).unwrap_or(body).as_bytes();
    let Some(&first) = body.first() else {
        return Err(Error::Graph6("empty line".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(Error::Graph6(format!("byte {first} out of range in size field")));
    }
    if first == 126 {
        // sizes >= 63 use a multi-byte size field; all exceed the vertex cap
        return Err(Error::VertexCount(decode_long_size(body)?));
    }
    let n = (first - 63) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let nbits = n * (n - 1) / 2;
    let data = &body[1..];
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(Error::Graph6(format!("expected {expected} data bytes for n={n}, found {}", data.len())));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for (idx, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} out of range at offset {}", idx + 1)));
        }
        let v = b - 63;
        for shift in (0..6).rev() {
            let bit = (v >> shift) & 1 == 1;
            if k < nbits {
                if bit {
                    let (i, j) = triangle_position(k);
                    g.set_edge(i, j);
                }
            } else if bit {
                return Err(Error::Graph6("non-zero padding bits".into()));
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_long_size(body: &[u8]) -> Result<usize> {
    let field = if body.get(1) == Some(&126) { &body[2..body.len().min(8)] } else { &body[1..body.len().min(4)] };
    let mut n = 0usize;
    for &b in field {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} out of range in size field")));
        }
        n = (n << 6) | (b - 63) as usize;
    }
    Ok(n)
}

/// Bit index `k` in column-major upper-triangle order to the pair `(i, j)`, `i < j`.
fn triangle_position(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}
