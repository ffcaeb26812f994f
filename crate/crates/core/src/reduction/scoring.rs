use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;

use crate::error::Result;
use crate::graph::algo::multi_source_bfs;
use crate::graph::{Distance, Graph, NodeSet};
use crate::propagation::Propagator;

/// Degree plus a distance term `1 - 1/(d + 1)`, where `d` is the hop
/// distance to the nearest preferred node. The distance term is below one,
/// so ordering by the pair `(degree, distance)` is the same as ordering by the
/// numeric value; we compare the pair and only build the number for display.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Score {
    pub degree: usize,
    pub pref_distance: Distance,
}

impl Score {
    /// Distance term; 1 when no preferred node is reachable.
    pub fn fraction(&self) -> Ratio<u64> {
        match self.pref_distance {
            Distance::Hops(d) => Ratio::new(u64::from(d), u64::from(d) + 1),
            Distance::Unreachable => Ratio::from_integer(1),
        }
    }

    pub fn value(&self) -> Ratio<u64> {
        Ratio::from_integer(self.degree as u64) + self.fraction()
    }

    pub fn as_f64(&self) -> f64 {
        let v = self.value();
        *v.numer() as f64 / *v.denom() as f64
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.3}", self.as_f64())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoredCandidate {
    pub node: String,
    pub score: Score,
}

impl ScoredCandidate {
    /// Descending score, then ascending label.
    pub fn search_order(&self, other: &Self) -> Ordering {
        other.score.cmp(&self.score).then_with(|| self.node.cmp(&other.node))
    }
}

/// Nodes whose closed neighbourhood is already observed after running the
/// process on `pref`. Adding such a node to any PMU set changes nothing.
pub fn redundant_nodes<S: AsRef<str>>(g: &Graph, pref: &[S]) -> Result<NodeSet> {
    let idx = g.resolve(pref)?;
    Ok(g.labels_of(redundant_flags(g, &idx).into_iter().enumerate().filter_map(|(v, r)| r.then_some(v))))
}

pub fn qualitative_scores<S: AsRef<str>>(g: &Graph, pref: &[S]) -> Result<BTreeMap<String, ScoredCandidate>> {
    let idx = g.resolve(pref)?;
    let dist = multi_source_bfs(g, &idx);
    Ok((0..g.node_count())
        .map(|v| {
            let node = g.label(v).to_owned();
            let score = Score {
                degree: g.deg(v),
                pref_distance: dist[v],
            };
            (node.clone(), ScoredCandidate { node, score })
        })
        .collect())
}

/// Nodes of degree >= 3 that are neither preferred nor redundant, best first.
pub fn candidate_list<S: AsRef<str>>(g: &Graph, pref: &[S]) -> Result<Vec<ScoredCandidate>> {
    let idx = g.resolve(pref)?;
    let redundant = redundant_flags(g, &idx);
    let mut is_pref = vec![false; g.node_count()];
    for &p in &idx {
        is_pref[p] = true;
    }
    let scores = qualitative_scores(g, pref)?;
    let mut out: Vec<ScoredCandidate> = (0..g.node_count())
        .filter(|&v| g.deg(v) >= 3 && !is_pref[v] && !redundant[v])
        .map(|v| scores[g.label(v)].clone())
        .collect();
    out.sort_by(ScoredCandidate::search_order);
    Ok(out)
}

fn redundant_flags(g: &Graph, pref: &[usize]) -> Vec<bool> {
    if pref.is_empty() {
        return vec![false; g.node_count()];
    }
    let mut prop = Propagator::new(g);
    prop.run(pref);
    let obs = prop.observed();
    (0..g.node_count())
        .map(|v| obs[v] && g.adj(v).iter().all(|&w| obs[w]))
        .collect()
}
