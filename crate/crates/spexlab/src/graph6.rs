//! Bit-exact graph6 encoding: size word N(n), then the upper-triangle
//! bits x01, x02, x12, x03, ... in column order, packed big-endian into
//! 6-bit groups, each offset by 63 into printable ASCII.

use crate::graph::Graph;
use crate::{Error, Result};

const OFFSET: u8 = 63;
/// Largest n representable in graph6 (2^36 - 1).
pub const MAX_G6_N: u64 = 68_719_476_735;

fn size_word(n: usize) -> Vec<u8> {
    let n = n as u64;
    if n <= 62 {
        vec![n as u8 + OFFSET]
    } else if n <= 258_047 {
        let mut out = vec![126];
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
        out
    } else {
        let mut out = vec![126, 126];
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
        out
    }
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = size_word(n);
    let mut acc: u8 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                bytes.push(acc + OFFSET);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((acc << (6 - nbits)) + OFFSET);
    }
    String::from_utf8(bytes).unwrap()
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Graph6 { msg: msg.into(), line: None }
}

/// Decodes one graph6 line (leading ">>graph6<<" header and surrounding
/// whitespace tolerated).
pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty line"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(bad(format!("illegal character {:?}", b as char)));
        }
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as u64, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated size word"));
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - OFFSET) as u64;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(bad("truncated size word"));
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - OFFSET) as u64;
        }
        (n, 8)
    };
    if n > crate::graph::MAX_VERTICES as u64 {
        return Err(Error::TooLarge { n: n as usize, limit: crate::graph::MAX_VERTICES });
    }
    let n = n as usize;
    let nbits = if n == 0 { 0 } else { n * (n - 1) / 2 };
    let expect_bytes = (nbits + 5) / 6;
    if bytes.len() - pos != expect_bytes {
        return Err(bad(format!(
            "wrong length: n={n} needs {expect_bytes} data bytes, got {}",
            bytes.len() - pos
        )));
    }
    let mut g = Graph::new(n);
    let mut acc: u8 = 0;
    let mut avail = 0;
    for j in 1..n {
        for i in 0..j {
            if avail == 0 {
                acc = bytes[pos] - OFFSET;
                pos += 1;
                avail = 6;
            }
            if acc & 0x20 != 0 {
                g.add_edge(i, j);
            }
            acc = (acc << 1) & 0x3f;
            avail -= 1;
        }
    }
    if avail > 0 && acc != 0 {
        return Err(bad("nonzero trailing padding bits"));
    }
    Ok(g)
}
