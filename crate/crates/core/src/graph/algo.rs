use std::collections::{BTreeMap, VecDeque};

use super::{Graph, NodeSet};
use crate::error::{PdtError, Result};

/// Hop count from a source, or `Unreachable`. `Hops(_)` sorts before `Unreachable`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Hops(u32),
    Unreachable,
}

impl Distance {
    pub fn hops(self) -> Option<u32> {
        match self {
            Distance::Hops(h) => Some(h),
            Distance::Unreachable => None,
        }
    }
}

/// Shortest-path hop counts from one source node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap {
    source: String,
    dist: BTreeMap<String, Distance>,
}

impl DistanceMap {
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn get(&self, label: &str) -> Option<Distance> {
        self.dist.get(label).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Distance)> {
        self.dist.iter().map(|(k, &d)| (k.as_str(), d))
    }
}

/// Maximal connected node sets, ordered by their first node; each block lists
/// nodes in insertion order.
pub fn connected_components(g: &Graph) -> Vec<Vec<String>> {
    component_blocks(g)
        .into_iter()
        .map(|b| b.into_iter().map(|i| g.label(i).to_owned()).collect())
        .collect()
}

/// Nodes whose removal increases the number of connected components.
pub fn articulation_points(g: &Graph) -> NodeSet {
    let cut = cut_node_flags(g);
    g.labels_of((0..g.node_count()).filter(|&i| cut[i]))
}

pub fn bfs_distances(g: &Graph, source: &str) -> Result<DistanceMap> {
    let s = g
        .index_of(source)
        .ok_or_else(|| PdtError::NotFound(format!("node {source:?}")))?;
    let d = multi_source_bfs(g, &[s]);
    Ok(DistanceMap {
        source: source.to_owned(),
        dist: (0..g.node_count())
            .map(|i| (g.label(i).to_owned(), d[i]))
            .collect(),
    })
}

/// Component id per node and the number of components.
pub(crate) fn component_ids(g: &Graph) -> (Vec<usize>, usize) {
    component_ids_without(g, None)
}

/// Component ids of `g - skip`; `skip` itself gets `usize::MAX`.
pub(crate) fn component_ids_without(g: &Graph, skip: Option<usize>) -> (Vec<usize>, usize) {
    let n = g.node_count();
    let mut id = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if id[s] != usize::MAX || Some(s) == skip {
            continue;
        }
        id[s] = count;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in g.adj(u) {
                if id[v] == usize::MAX && Some(v) != skip {
                    id[v] = count;
                    queue.push_back(v);
                }
            }
        }
        count += 1;
    }
    (id, count)
}

pub(crate) fn component_blocks(g: &Graph) -> Vec<Vec<usize>> {
    let (id, count) = component_ids(g);
    let mut blocks = vec![Vec::new(); count];
    for (v, &c) in id.iter().enumerate() {
        blocks[c].push(v);
    }
    blocks
}

pub(crate) fn multi_source_bfs(g: &Graph, sources: &[usize]) -> Vec<Distance> {
    let mut dist = vec![Distance::Unreachable; g.node_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] == Distance::Unreachable {
            dist[s] = Distance::Hops(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let Distance::Hops(du) = dist[u] else { unreachable!() };
        for &v in g.adj(u) {
            if dist[v] == Distance::Unreachable {
                dist[v] = Distance::Hops(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Iterative low-link computation.
pub(crate) fn cut_node_flags(g: &Graph) -> Vec<bool> {
    let n = g.node_count();
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut cut = vec![false; n];
    let mut time = 0u32;
    // (node, parent, next neighbour position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != u32::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));

        while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&v) = g.adj(u).get(*pos) {
                *pos += 1;
                if disc[v] == u32::MAX {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, 0));
                } else if v != parent {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if parent != root && low[u] >= disc[parent] {
                        cut[parent] = true;
                    }
                }
            }
        }
        cut[root] = root_children >= 2;
    }
    cut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builtin_graph;

    fn set(items: &[&str]) -> NodeSet {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn components_small_cases() {
        let p3 = Graph::from_edges([("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(connected_components(&p3).len(), 1);
        let two = Graph::from_edges([("a", "b"), ("c", "d")]).unwrap();
        assert_eq!(
            connected_components(&two),
            vec![vec!["a".to_string(), "b".into()], vec!["c".into(), "d".into()]]
        );
        assert!(connected_components(&Graph::default()).is_empty());
    }

    #[test]
    fn cut_nodes_small_cases() {
        let zim = builtin_graph("zim").unwrap();
        assert_eq!(articulation_points(&zim), set(&["5", "7", "9"]));
        let c5 = Graph::from_edges([("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("5", "1")]).unwrap();
        assert!(articulation_points(&c5).is_empty());
        let p3 = Graph::from_edges([("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(articulation_points(&p3), set(&["b"]));
    }

    #[test]
    fn distances() {
        let zim = builtin_graph("zim").unwrap();
        let d = bfs_distances(&zim, "2").unwrap();
        assert_eq!(d.get("9"), Some(Distance::Hops(2)));
        assert_eq!(d.get("2"), Some(Distance::Hops(0)));
        let two = Graph::from_edges([("a", "b"), ("c", "d")]).unwrap();
        assert_eq!(bfs_distances(&two, "a").unwrap().get("d"), Some(Distance::Unreachable));
        assert!(bfs_distances(&two, "z").is_err());
    }

    #[test]
    fn distance_order() {
        assert!(Distance::Hops(1_000) < Distance::Unreachable);
        assert!(Distance::Hops(1) < Distance::Hops(2));
    }
}
