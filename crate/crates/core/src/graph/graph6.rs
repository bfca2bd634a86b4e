//! graph6 encoding, short form only (`n <= 62`).
//!
//! One size byte `n + 63`, then the upper triangle of the adjacency matrix
//! read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per
//! byte with the most significant bit first, each byte offset by 63 and the
//! last one padded with zero bits.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_SHORT_FORM: usize = 62;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_FORM {
        return Err(Error::input(format!(
            "graph6 short form holds at most {MAX_SHORT_FORM} vertices, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::format(0, "empty graph6 string"));
    };
    if first == b'~' {
        return Err(Error::format(
            0,
            "long-form graph6 (n > 62) is not supported",
        ));
    }
    if !(63..=126).contains(&first) {
        return Err(Error::format(0, format!("invalid size byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(Error::format(
            bytes.len().min(expected),
            format!("expected {expected} bytes for n = {n}, got {}", bytes.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let offset = 1 + k / 6;
            let b = bytes[offset];
            if !(63..=126).contains(&b) {
                return Err(Error::format(offset, format!("invalid data byte {b:#04x}")));
            }
            if ((b - 63) >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let offset = bytes.len() - 1;
        let last = bytes[offset];
        if !(63..=126).contains(&last) {
            return Err(Error::format(
                offset,
                format!("invalid data byte {last:#04x}"),
            ));
        }
        let pad = 6 - nbits % 6;
        if (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::format(offset, "nonzero padding bits"));
        }
    }
    Ok(g)
}
