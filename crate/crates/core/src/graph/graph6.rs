use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Encodes a graph as a graph6 record (no header, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} is not a graph6 character")));
        }
    }
    let (n, header_len) = match body.first() {
        None => return Err(err(base, "empty record")),
        Some(&126) => {
            if body.get(1) == Some(&126) {
                let digits = body
                    .get(2..8)
                    .ok_or_else(|| err(base + body.len(), "truncated length field"))?;
                let n = digits
                    .iter()
                    .fold(0usize, |acc, &d| acc << 6 | (d - 63) as usize);
                (n, 8)
            } else {
                let digits = body
                    .get(1..4)
                    .ok_or_else(|| err(base + body.len(), "truncated length field"))?;
                let n = digits
                    .iter()
                    .fold(0usize, |acc, &d| acc << 6 | (d - 63) as usize);
                if n <= 62 {
                    return Err(err(base, format!("non-canonical length encoding for {n}")));
                }
                (n, 4)
            }
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(err(
            base,
            format!("order {n} exceeds the supported bound {MAX_ORDER}"),
        ));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != need {
        let offset = base + header_len + data.len().min(need);
        return Err(err(
            offset,
            format!(
                "expected {need} adjacency bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + header_len + need - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Parses a graph6 file: one record per line, blank lines and `#` comments skipped.
/// Returns the graphs with their 1-based line numbers.
pub fn parse_graph6_lines(text: &str) -> std::result::Result<Vec<(usize, Graph)>, (usize, Error)> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match decode_graph6(line) {
            Ok(g) => out.push((i + 1, g)),
            Err(e) => return Err((i + 1, e)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::named::*;
    use super::*;

    #[test]
    fn small_records() {
        assert_eq!(decode_graph6("A_").unwrap(), complete(2));
        assert_eq!(decode_graph6("@").unwrap(), complete(1));
        assert_eq!(decode_graph6("Bw").unwrap(), complete(3));
        assert_eq!(decode_graph6("?").unwrap(), Graph::new(0));
        assert_eq!(decode_graph6(">>graph6<<A_\n").unwrap(), complete(2));
        assert_eq!(encode_graph6(&complete(2)), "A_");
        assert_eq!(encode_graph6(&complete(1)), "@");
        assert_eq!(encode_graph6(&complete(3)), "Bw");
        assert_eq!(encode_graph6(&petersen()), "IheA@GUAo");
    }

    #[test]
    fn long_length_field() {
        let g = cycle(70);
        let s = encode_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(decode_graph6(&s).unwrap(), g);
        let g = complete(128);
        assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        match decode_graph6("A`") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        match decode_graph6("Bw?") {
            Err(Error::Graph6 { offset: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match decode_graph6("A\u{1}") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("~??").is_err());
    }

    #[test]
    fn file_parsing_skips_comments() {
        let parsed = parse_graph6_lines("# corpus\nA_\n\nBw\n").unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[1].0, 4);
        assert_eq!(parse_graph6_lines("A_\nA`\n").unwrap_err().0, 2);
    }
}
