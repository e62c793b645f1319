//! graph6 encoding (McKay): size header, then the upper triangle in
//! column-major order packed into 6-bit groups offset by 63.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order expressible with the one- or four-byte size header.
pub const MAX_ORDER: usize = 258_047;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        assert!(n <= MAX_ORDER, "graph6 order {n} exceeds {MAX_ORDER}");
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn data_byte(text: &[u8], offset: usize) -> Result<u8> {
    match text.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(Error::Graph6 {
            offset,
            reason: format!("byte 0x{b:02x} outside the printable range 63..=126"),
        }),
        None => Err(Error::Graph6 {
            offset,
            reason: "truncated input".into(),
        }),
    }
}

/// Parses one graph6 record. A trailing line terminator and an optional
/// `>>graph6<<` prefix are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut text = text;
    while let [rest @ .., b'\n' | b'\r'] = text {
        text = rest;
    }
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(b">>graph6<<") {
        text = rest;
        base = 10;
    }
    let at = |o: usize| o + base;
    let wrap = |e: Error| match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: at(offset),
            reason,
        },
        other => other,
    };

    let (n, mut pos) = match text.first() {
        None => {
            return Err(Error::Graph6 {
                offset: at(0),
                reason: "empty input".into(),
            })
        }
        Some(b'~') => {
            if text.get(1) == Some(&b'~') {
                return Err(Error::Graph6 {
                    offset: at(1),
                    reason: format!("eight-byte size header unsupported (orders above {MAX_ORDER})"),
                });
            }
            let mut n = 0usize;
            for k in 1..4 {
                n = (n << 6) | data_byte(text, k).map_err(wrap)? as usize;
            }
            if n <= 62 {
                return Err(Error::Graph6 {
                    offset: at(1),
                    reason: format!("long-form header used for order {n} <= 62"),
                });
            }
            (n, 4)
        }
        Some(_) => (data_byte(text, 0).map_err(wrap)? as usize, 1),
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if text.len() < pos + nbytes {
        return Err(Error::Graph6 {
            offset: at(text.len()),
            reason: format!("truncated payload: expected {nbytes} data bytes for order {n}"),
        });
    }
    if text.len() > pos + nbytes {
        return Err(Error::Graph6 {
            offset: at(pos + nbytes),
            reason: "trailing bytes after payload".into(),
        });
    }

    let mut g = Graph::empty(n);
    let mut bit = 0;
    let mut cur = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit % 6 == 0 {
                cur = data_byte(text, pos).map_err(wrap)?;
                pos += 1;
            }
            if cur >> (5 - bit % 6) & 1 == 1 {
                g.insert(i, j);
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let pad = 6 - bit % 6;
        if cur & ((1u8 << pad) - 1) != 0 {
            return Err(Error::Graph6 {
                offset: at(pos - 1),
                reason: "nonzero padding bits".into(),
            });
        }
    }
    Ok(g)
}
