use super::Graph;
use crate::error::{PdtError, Result};

/// Parses whitespace-separated `u v` lines. `#` starts a comment; blank lines
/// are skipped. A line with a single label declares an isolated node.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut b = Graph::builder();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [u] => {
                b.add_node(u);
            }
            [u, v] => {
                if u == v {
                    return Err(PdtError::Format(format!(
                        "line {}: self-loop on node {u:?}",
                        lineno + 1
                    )));
                }
                b.add_edge(u, v)?;
            }
            _ => {
                return Err(PdtError::Format(format!(
                    "line {}: expected 2 labels, found {}",
                    lineno + 1,
                    tokens.len()
                )))
            }
        }
    }
    Ok(b.build())
}

/// One `u v` line per edge, followed by isolated nodes on their own lines.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(u);
        out.push(' ');
        out.push_str(v);
        out.push('\n');
    }
    for l in g.labels() {
        if g.degree(l) == Some(0) {
            out.push_str(l);
            out.push('\n');
        }
    }
    out
}
