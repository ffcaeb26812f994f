//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order `(0,1),(0,2),(1,2),(0,3),…`, packed
//! most-significant-bit first into 6-bit groups offset by 63.

use super::Graph;
use crate::error::{PdtError, Result};

const HEADER: &[u8] = b">>graph6<<";
const MAX_NODES: u64 = 1 << 36;

/// Decodes a single graph6 record. Labels are `"0".."n-1"`.
pub fn parse_graph6(data: &[u8]) -> Result<Graph> {
    let data = data.strip_prefix(HEADER).unwrap_or(data);
    let data = trim_ascii_end(data);
    if data.is_empty() {
        return Err(PdtError::Format("empty graph6 record".into()));
    }
    if let Some(&b) = data.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(PdtError::Format(format!("byte {b} outside graph6 range 63..=126")));
    }
    let (n, body) = decode_size(data)?;
    let n = usize::try_from(n).map_err(|_| PdtError::Format("graph too large".into()))?;

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(PdtError::Format(format!(
            "truncated adjacency section: expected {need} bytes, found {}",
            body.len()
        )));
    }
    if body.len() > need {
        return Err(PdtError::Format(format!(
            "{} trailing bytes after adjacency section",
            body.len() - need
        )));
    }

    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut adj = vec![Vec::new(); n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[i].push(j);
                adj[j].push(i);
            }
            k += 1;
        }
    }
    for ns in &mut adj {
        ns.sort_unstable();
    }
    Ok(Graph::from_parts(labels, adj))
}

/// Decodes one graph per non-empty line.
pub fn parse_graph6_many(data: &[u8]) -> Result<Vec<Graph>> {
    data.split(|&b| b == b'\n')
        .map(trim_ascii_end)
        .filter(|line| !line.is_empty())
        .map(parse_graph6)
        .collect()
}

/// Encodes a graph using its insertion order as the vertex numbering. No header, no newline.
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.node_count();
    let mut out = encode_size(n as u64);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.adj(j).binary_search(&i).is_ok() {
                acc |= 1;
            }
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
    out
}

fn decode_size(data: &[u8]) -> Result<(u64, &[u8])> {
    let take = |bytes: &[u8]| bytes.iter().fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63));
    match data {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(PdtError::Format("truncated 8-byte size prefix".into()));
            }
            let n = take(&rest[..6]);
            if n >= MAX_NODES {
                return Err(PdtError::Format("graph6 order out of range".into()));
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(PdtError::Format("truncated 4-byte size prefix".into()));
            }
            Ok((take(&rest[..3]), &rest[3..]))
        }
        [b, rest @ ..] => Ok((u64::from(b - 63), rest)),
        [] => Err(PdtError::Format("empty graph6 record".into())),
    }
}

fn encode_size(n: u64) -> Vec<u8> {
    let six = |shift: u32| ((n >> shift) & 0x3f) as u8 + 63;
    if n < 63 {
        vec![n as u8 + 63]
    } else if n < 258_048 {
        vec![126, six(12), six(6), six(0)]
    } else {
        let mut v = vec![126, 126];
        v.extend((0..6).rev().map(|k| six(6 * k)));
        v
    }
}

fn trim_ascii_end(mut s: &[u8]) -> &[u8] {
    while let [rest @ .., last] = s {
        if last.is_ascii_whitespace() {
            s = rest;
        } else {
            break;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_graph6(b"Bw").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 3));
        assert_eq!(write_graph6(&g), b"Bw");
    }

    #[test]
    fn single_node_and_empty() {
        let g = parse_graph6(b"@").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (1, 0));
        assert_eq!(write_graph6(&g), b"@");
        assert_eq!(parse_graph6(b"?").unwrap().node_count(), 0);
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(b">>graph6<<Bw\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn rejects_bad_bytes_and_truncation() {
        assert!(matches!(parse_graph6(b"B\x20w"), Err(PdtError::Format(_))));
        // 5 nodes need 10 bits = 2 bytes
        assert!(matches!(parse_graph6(b"D?"), Err(PdtError::Format(_))));
        assert!(matches!(parse_graph6(b"Bww"), Err(PdtError::Format(_))));
        assert!(matches!(parse_graph6(b""), Err(PdtError::Format(_))));
        assert!(matches!(parse_graph6(b"~?"), Err(PdtError::Format(_))));
    }

    #[test]
    fn known_five_node_encoding() {
        let mut b = Graph::builder();
        for i in 0..5 {
            b.add_node(&i.to_string());
        }
        for (u, v) in [("0", "2"), ("0", "4"), ("1", "3"), ("3", "4")] {
            b.add_edge(u, v).unwrap();
        }
        assert_eq!(write_graph6(&b.build()), b"DQc");
    }

    #[test]
    fn long_size_prefix() {
        let n = 100;
        let mut b = Graph::builder();
        for i in 0..n {
            b.add_node(&i.to_string());
        }
        b.add_edge("0", "99").unwrap();
        let g = b.build();
        let bytes = write_graph6(&g);
        assert_eq!(&bytes[..4], &[126, 63, 64, 99]);
        let h = parse_graph6(&bytes).unwrap();
        assert_eq!(h.node_count(), 100);
        assert!(h.has_edge("0", "99"));
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn many_records() {
        let gs = parse_graph6_many(b"Bw\n@\n\nA_\n").unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(gs[2].edge_count(), 1);
    }
}
