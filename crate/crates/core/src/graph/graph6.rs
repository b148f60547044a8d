//! graph6 encoding: size header, then the upper triangle in column order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`) packed six bits per byte, offset 63.

use super::{Graph, GraphError};

const MAX_ORDER: usize = 68_719_476_735;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    assert!(n <= MAX_ORDER, "graph6 cannot encode order {n}");
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn g6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n.saturating_sub(1) / 12);
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn malformed(offset: usize, reason: &'static str) -> GraphError {
    GraphError::MalformedGraph6 { offset, reason }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<usize, GraphError> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
        Some(_) => Err(malformed(offset, "byte outside the printable range 63..=126")),
        None => Err(malformed(offset, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// newline are accepted.
pub fn g6_decode(input: &[u8]) -> Result<Graph, GraphError> {
    let mut start = 0;
    if input.starts_with(b">>graph6<<") {
        start = 10;
    }
    let mut end = input.len();
    while end > start && matches!(input[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let bytes = &input[..end];

    let (n, mut pos) = if bytes.get(start) == Some(&126) {
        if bytes.get(start + 1) == Some(&126) {
            let mut n = 0;
            for i in 0..6 {
                n = (n << 6) | sextet(bytes, start + 2 + i)?;
            }
            (n, start + 8)
        } else {
            let mut n = 0;
            for i in 0..3 {
                n = (n << 6) | sextet(bytes, start + 1 + i)?;
            }
            (n, start + 4)
        }
    } else {
        (sextet(bytes, start)?, start + 1)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if bytes.len() - pos != expected {
        return Err(malformed(
            pos.min(bytes.len()),
            if bytes.len() - pos < expected { "edge data too short" } else { "trailing bytes after edge data" },
        ));
    }

    let mut g = Graph::empty(n);
    let mut bit_index = 0;
    let mut current = 0;
    let mut remaining = 0;
    for j in 1..n {
        for i in 0..j {
            if remaining == 0 {
                current = sextet(bytes, pos)?;
                pos += 1;
                remaining = 6;
            }
            remaining -= 1;
            if current >> remaining & 1 == 1 {
                g.add_edge(i, j);
            }
            bit_index += 1;
        }
    }
    debug_assert_eq!(bit_index, bits);
    if remaining > 0 && current & ((1 << remaining) - 1) != 0 {
        return Err(malformed(pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}
