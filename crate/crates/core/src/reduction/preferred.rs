use std::collections::BTreeMap;

use crate::error::{PdtError, Result};
use crate::graph::algo::{component_ids, component_ids_without, cut_node_flags};
use crate::graph::{Graph, NodeSet};
use crate::propagation::Propagator;

/// Nodes that can be fixed into the PMU set before searching.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PreferredReport {
    /// Nodes with at least two terminal paths.
    pub b_preferred: NodeSet,
    /// Cut nodes whose terminal fort is fully observed by the node alone.
    pub f_preferred: NodeSet,
    /// For each f-preferred node, the largest such fort.
    pub forts: BTreeMap<String, NodeSet>,
    /// First (byte order) f-preferred node whose fort component holds another
    /// f-preferred node. Its presence means a single PMU suffices.
    pub p_preferred: Option<String>,
    /// `{p_preferred}` if present, otherwise `b_preferred ∪ f_preferred`.
    pub pref: NodeSet,
}

/// Classifies the b-, f- and p-preferred nodes of a connected graph.
///
/// For a cut node `v`, every union of components of `g - v` has `v` as its
/// only outside neighbour, so it is a fort exactly when `v` has at least two
/// edges into it. `v` is f-preferred when the components that `{v}` observes
/// completely together carry at least two such edges.
pub fn preferred_nodes(g: &Graph) -> Result<PreferredReport> {
    let (_, count) = component_ids(g);
    if count > 1 {
        return Err(PdtError::Precondition(format!(
            "preferred-node analysis needs a connected graph, found {count} components"
        )));
    }
    let n = g.node_count();
    let cut = cut_node_flags(g);
    let mut prop = Propagator::new(g);

    let b: Vec<usize> = (0..n).filter(|&v| terminal_paths(g, v) >= 2).collect();

    let mut f: Vec<FNode> = Vec::new();
    for v in (0..n).filter(|&v| cut[v]) {
        prop.run(&[v]);
        let observed = prop.observed();
        let (ids, k) = component_ids_without(g, Some(v));
        let mut full = vec![true; k];
        for u in (0..n).filter(|&u| u != v) {
            if !observed[u] {
                full[ids[u]] = false;
            }
        }
        let mut edges = vec![0usize; k];
        for &u in g.adj(v) {
            edges[ids[u]] += 1;
        }
        let attached: usize = (0..k).filter(|&c| full[c]).map(|c| edges[c]).sum();
        if attached < 2 {
            continue;
        }
        let fort: Vec<usize> = (0..n).filter(|&u| u != v && full[ids[u]]).collect();
        let witnesses: Vec<Vec<usize>> = (0..k)
            .filter(|&c| full[c] && edges[c] >= 2)
            .map(|c| (0..n).filter(|&u| u != v && ids[u] == c).collect())
            .collect();
        f.push(FNode { v, fort, witnesses });
    }

    let mut is_f = vec![false; n];
    for x in &f {
        is_f[x.v] = true;
    }
    let mut by_label: Vec<&FNode> = f.iter().collect();
    by_label.sort_by(|a, b| g.label(a.v).cmp(g.label(b.v)));
    let p = by_label
        .iter()
        .find(|x| x.witnesses.iter().any(|c| c.iter().any(|&u| is_f[u])))
        .map(|x| x.v);

    let b_preferred = g.labels_of(b.iter().copied());
    let f_preferred = g.labels_of(f.iter().map(|x| x.v));
    let pref = match p {
        Some(v) => g.labels_of([v]),
        None => b_preferred.union(&f_preferred).cloned().collect(),
    };
    Ok(PreferredReport {
        forts: f
            .iter()
            .map(|x| (g.label(x.v).to_owned(), g.labels_of(x.fort.iter().copied())))
            .collect(),
        b_preferred,
        f_preferred,
        p_preferred: p.map(|v| g.label(v).to_owned()),
        pref,
    })
}

struct FNode {
    v: usize,
    fort: Vec<usize>,
    /// Single fully observed components with at least two edges to `v`.
    witnesses: Vec<Vec<usize>>,
}

/// Number of neighbours of `v` that start a degree-2 run ending in a leaf.
fn terminal_paths(g: &Graph, v: usize) -> usize {
    g.adj(v)
        .iter()
        .filter(|&&w| {
            let (mut prev, mut cur) = (v, w);
            loop {
                match g.deg(cur) {
                    1 => return true,
                    2 => {
                        let nb = g.adj(cur);
                        let next = if nb[0] == prev { nb[1] } else { nb[0] };
                        if next == v {
                            return false;
                        }
                        prev = cur;
                        cur = next;
                    }
                    _ => return false,
                }
            }
        })
        .count()
}
