use std::collections::BTreeMap;

use crate::error::{PdtError, Result};
use crate::graph::algo::component_blocks;
use crate::graph::{Graph, NodeSet};

/// Which rule removed a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContractionRule {
    /// Part of a degree-2 run ending in a leaf.
    Terminal,
    /// Interior of a degree-2 run between two high-degree anchors.
    NonTerminal,
}

impl ContractionRule {
    pub fn as_str(self) -> &'static str {
        match self {
            ContractionRule::Terminal => "terminal",
            ContractionRule::NonTerminal => "non_terminal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionReport {
    pub contracted: Graph,
    pub removed: NodeSet,
    pub rules: BTreeMap<String, ContractionRule>,
}

/// Shortens degree-2 runs.
///
/// A run hanging off an anchor (degree >= 3) and ending in a leaf keeps only
/// the node next to the anchor, which becomes the new leaf. A run of more
/// than two nodes between anchors (possibly the same anchor) keeps its first
/// and last node, joined by a new edge.
///
/// Every component needs a node of degree >= 3; paths and cycles have no
/// anchor to contract towards.
pub fn contract(g: &Graph) -> Result<ContractionReport> {
    for block in component_blocks(g) {
        if block.iter().all(|&v| g.deg(v) <= 2) {
            return Err(PdtError::Precondition(format!(
                "component containing {:?} is a path or cycle",
                g.label(block[0])
            )));
        }
    }

    let n = g.node_count();
    let mut seen = vec![false; n];
    let mut removed: Vec<(usize, ContractionRule)> = Vec::new();
    let mut new_edges: Vec<(usize, usize)> = Vec::new();

    for anchor in 0..n {
        if g.deg(anchor) < 3 {
            continue;
        }
        for &first in g.adj(anchor) {
            if g.deg(first) != 2 || seen[first] {
                continue;
            }
            let mut run = vec![first];
            let (mut prev, mut cur) = (anchor, first);
            let end = loop {
                let nb = g.adj(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                if g.deg(next) == 2 {
                    run.push(next);
                    prev = cur;
                    cur = next;
                } else {
                    break next;
                }
            };
            for &v in &run {
                seen[v] = true;
            }
            if g.deg(end) == 1 {
                for &v in run[1..].iter().chain(std::iter::once(&end)) {
                    removed.push((v, ContractionRule::Terminal));
                }
            } else if run.len() > 2 {
                for &v in &run[1..run.len() - 1] {
                    removed.push((v, ContractionRule::NonTerminal));
                }
                new_edges.push((run[0], run[run.len() - 1]));
            }
        }
    }

    let mut gone = vec![false; n];
    for &(v, _) in &removed {
        gone[v] = true;
    }
    let mut b = Graph::builder();
    for v in (0..n).filter(|&v| !gone[v]) {
        b.add_node(g.label(v));
    }
    let mut add = |u: usize, v: usize| {
        let a = b.add_node(g.label(u));
        let c = b.add_node(g.label(v));
        b.add_edge_index(a, c);
    };
    for (u, v) in (0..n).flat_map(|u| g.adj(u).iter().map(move |&v| (u, v))) {
        if u < v && !gone[u] && !gone[v] {
            add(u, v);
        }
    }
    for (u, v) in new_edges {
        add(u, v);
    }

    Ok(ContractionReport {
        contracted: b.build(),
        removed: g.labels_of(removed.iter().map(|&(v, _)| v)),
        rules: removed
            .into_iter()
            .map(|(v, r)| (g.label(v).to_owned(), r))
            .collect(),
    })
}
