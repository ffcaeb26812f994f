//! Simple undirected graphs with opaque text labels.
//!
//! Nodes are addressed by label in the public API. Internally every node has a
//! dense index in `0..n` (insertion order) and adjacency is kept as sorted
//! index lists, which is what the propagation and search code iterates over.

pub(crate) mod algo;
mod builtin;
mod edgelist;
mod graph6;
mod random;

pub use algo::{articulation_points, bfs_distances, connected_components, Distance, DistanceMap};
pub use builtin::{builtin_graph, BUILTIN_NAMES};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, parse_graph6_many, write_graph6};
pub use random::erdos_renyi_connected;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{PdtError, Result};

/// Ordered set of node labels, compared in byte order.
pub type NodeSet = BTreeSet<String>;

/// Immutable simple undirected graph.
#[derive(Clone, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    /// Builds a graph from label pairs; nodes are created in first-mention order.
    pub fn from_edges<'a, I>(edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut b = GraphBuilder::default();
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Node labels in insertion order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn degree(&self, label: &str) -> Option<usize> {
        self.index.get(label).map(|&i| self.adj[i].len())
    }

    pub fn neighbors(&self, label: &str) -> Option<impl Iterator<Item = &str> + '_> {
        let i = *self.index.get(label)?;
        Some(self.adj[i].iter().map(move |&j| self.labels[j].as_str()))
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index.get(u), self.index.get(v)) {
            (Some(&a), Some(&b)) => self.adj[a].binary_search(&b).is_ok(),
            _ => false,
        }
    }

    /// Each edge once, as `(u, v)` with `u` inserted before `v`.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.adj.iter().enumerate().flat_map(move |(u, ns)| {
            ns.iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (self.labels[u].as_str(), self.labels[v].as_str()))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Subgraph induced by the given labels, keeping their relative insertion order.
    pub fn induced_subgraph<S: AsRef<str>>(&self, nodes: &[S]) -> Result<Graph> {
        let idx = self.resolve(nodes)?;
        Ok(self.induced_by_index(&idx))
    }

    /// Maps labels to internal indices.
    pub(crate) fn resolve<S: AsRef<str>>(&self, nodes: &[S]) -> Result<Vec<usize>> {
        nodes
            .iter()
            .map(|s| {
                let s = s.as_ref();
                self.index
                    .get(s)
                    .copied()
                    .ok_or_else(|| PdtError::NotFound(format!("node {s:?}")))
            })
            .collect()
    }

    pub(crate) fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub(crate) fn adj(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub(crate) fn deg(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub(crate) fn labels_of(&self, idx: impl IntoIterator<Item = usize>) -> NodeSet {
        idx.into_iter().map(|i| self.labels[i].clone()).collect()
    }

    pub(crate) fn induced_by_index(&self, nodes: &[usize]) -> Graph {
        let mut keep: Vec<usize> = nodes.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut map = vec![usize::MAX; self.node_count()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let adj: Vec<Vec<usize>> = keep
            .iter()
            .map(|&i| {
                // old indices are ascending and map is monotone, so the result stays sorted
                self.adj[i]
                    .iter()
                    .filter_map(|&j| (map[j] != usize::MAX).then_some(map[j]))
                    .collect()
            })
            .collect();
        Graph::from_parts(labels, adj)
    }

    /// Assembles a graph from labels and symmetric sorted adjacency lists.
    pub(crate) fn from_parts(labels: Vec<String>, adj: Vec<Vec<usize>>) -> Graph {
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            labels,
            index,
            adj,
            edge_count,
        }
    }
}

impl PartialEq for Graph {
    /// Equal when both graphs have the same labels and the same edges, regardless
    /// of insertion order.
    fn eq(&self, other: &Graph) -> bool {
        if self.node_count() != other.node_count() || self.edge_count != other.edge_count {
            return false;
        }
        self.labels.iter().all(|l| other.contains(l)) && self.edges().all(|(u, v)| other.has_edge(u, v))
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("nodes", &self.labels)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental constructor for [`Graph`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl GraphBuilder {
    /// Adds a node if not present and returns its index.
    pub fn add_node(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        self.adj.push(BTreeSet::new());
        i
    }

    /// Adds an undirected edge, creating endpoints as needed. Duplicates collapse.
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<&mut Self> {
        if u == v {
            return Err(PdtError::Format(format!("self-loop on node {u:?}")));
        }
        let a = self.add_node(u);
        let b = self.add_node(v);
        self.adj[a].insert(b);
        self.adj[b].insert(a);
        Ok(self)
    }

    pub(crate) fn add_edge_index(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn build(self) -> Graph {
        let adj = self.adj.into_iter().map(|s| s.into_iter().collect()).collect();
        Graph::from_parts(self.labels, adj)
    }
}
