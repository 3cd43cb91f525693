//! graph6 encoding (short form only, `n <= 62`).
//!
//! Body bits are the upper triangle in column order
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian six to a byte,
//! each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

pub const HEADER: &[u8] = b">>graph6<<";
pub const MAX_SHORT_ORDER: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph. Accepts an optional `>>graph6<<` header and a single
/// trailing `\n` or `\r\n`.
pub fn from_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text;
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    let mut offset = 0;
    if bytes.starts_with(HEADER) {
        bytes = &bytes[HEADER.len()..];
        offset = HEADER.len();
    }
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| Error::decode(offset, "empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(Error::decode(
            offset,
            format!("length byte {first:#04x} outside printable range 63..=126"),
        ));
    }
    if first == 126 {
        return Err(Error::decode(
            offset,
            "long-form order (n > 62) is not supported",
        ));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::decode(offset, "graphs of order 0 are not supported"));
    }
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Error::decode(
            offset + 1 + body.len(),
            format!("truncated body: expected {expected} bytes, found {}", body.len()),
        ));
    }
    if body.len() > expected {
        return Err(Error::decode(
            offset + 1 + expected,
            format!("{} unexpected trailing bytes", body.len() - expected),
        ));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::decode(
                offset + 1 + i,
                format!("byte {b:#04x} outside printable range 63..=126"),
            ));
        }
    }

    let bit = |idx: usize| -> bool {
        let byte = body[idx / 6] - 63;
        byte >> (5 - idx % 6) & 1 == 1
    };
    let mut builder = GraphBuilder::new(n)?;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(idx) {
                builder.link(i, j);
            }
            idx += 1;
        }
    }
    let total = body.len() * 6;
    for pad in idx..total {
        if bit(pad) {
            return Err(Error::decode(
                offset + 1 + pad / 6,
                "nonzero padding bits",
            ));
        }
    }
    Ok(builder.build())
}

/// Canonical graph6 text for `g`, without header or newline.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_ORDER {
        return Err(Error::UnsupportedSize(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Infallible variant used for report keys; falls back to an edge list for
/// graphs too large for the short form.
pub(crate) fn key(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("n={}:{:?}", g.n(), g.edges().collect::<Vec<_>>()))
}
