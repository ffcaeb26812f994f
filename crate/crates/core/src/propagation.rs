//! The power domination process.
//!
//! A PMU observes its closed neighbourhood (domination step). Afterwards any
//! observed node with exactly one unobserved neighbour forces that neighbour
//! (zero forcing step), until no force applies. The closure does not depend on
//! the order forces are applied, so a worklist with per-node counters of
//! unobserved neighbours is enough: each edge is touched a constant number of
//! times per run.

use crate::error::Result;
use crate::graph::{Graph, NodeSet};

/// Observed nodes plus the forces applied, in application order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ObservationState {
    pub observed: NodeSet,
    pub force_log: Vec<(String, String)>,
}

impl ObservationState {
    pub fn observes_all(&self, g: &Graph) -> bool {
        self.observed.len() == g.node_count()
    }
}

/// A maximal path of successive forces. The first node is the PMU whose
/// domination step observed the chain's first forcer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingChain {
    pub nodes: Vec<String>,
}

/// Domination step only.
pub fn dominate<S: AsRef<str>>(g: &Graph, pmus: &[S]) -> Result<ObservationState> {
    let idx = g.resolve(pmus)?;
    let mut p = Propagator::new(g);
    p.dominate(&idx);
    Ok(p.state(None))
}

/// Runs the forcing rule to a fixed point starting from `state`, extending its log.
pub fn zero_force(g: &Graph, state: &ObservationState) -> Result<ObservationState> {
    let observed: Vec<&String> = state.observed.iter().collect();
    let idx = g.resolve(&observed)?;
    let mut p = Propagator::new(g);
    for v in idx {
        p.observe(v);
    }
    let mut log = Vec::new();
    p.close(Some(&mut log));
    let mut out = p.state(Some(&log));
    let mut full = state.force_log.clone();
    full.append(&mut out.force_log);
    out.force_log = full;
    Ok(out)
}

/// Domination step followed by the zero forcing closure.
pub fn power_dominate<S: AsRef<str>>(g: &Graph, pmus: &[S]) -> Result<ObservationState> {
    let idx = g.resolve(pmus)?;
    let mut p = Propagator::new(g);
    p.dominate(&idx);
    let mut log = Vec::new();
    p.close(Some(&mut log));
    Ok(p.state(Some(&log)))
}

pub fn is_power_dominating_set<S: AsRef<str>>(g: &Graph, pmus: &[S]) -> Result<bool> {
    let idx = g.resolve(pmus)?;
    Ok(Propagator::new(g).observes_all(&idx))
}

/// Splits the force log of `power_dominate(g, pmus)` into maximal chains.
///
/// Every node forces at most once (afterwards it has no unobserved neighbour)
/// and is forced at most once, so the log is a disjoint union of paths. Each
/// path starts at a node observed in the domination step; the chain is rooted
/// at the first PMU (in input order) adjacent to that node.
pub fn forcing_chains<S: AsRef<str>>(g: &Graph, pmus: &[S]) -> Result<Vec<ForcingChain>> {
    let idx = g.resolve(pmus)?;
    let mut p = Propagator::new(g);
    p.dominate(&idx);
    let mut log = Vec::new();
    p.close(Some(&mut log));

    let n = g.node_count();
    let mut next = vec![usize::MAX; n];
    let mut forced = vec![false; n];
    for &(u, w) in &log {
        next[u] = w;
        forced[w] = true;
    }
    let mut is_pmu = vec![false; n];
    for &v in &idx {
        is_pmu[v] = true;
    }

    let mut chains = Vec::new();
    for &(start, _) in &log {
        if forced[start] {
            continue;
        }
        let mut nodes = Vec::new();
        if !is_pmu[start] {
            let root = idx
                .iter()
                .copied()
                .find(|&q| g.adj(start).binary_search(&q).is_ok())
                .expect("a non-PMU forcer outside the forced set was observed by an adjacent PMU");
            nodes.push(g.label(root).to_owned());
        }
        let mut cur = start;
        loop {
            nodes.push(g.label(cur).to_owned());
            if next[cur] == usize::MAX {
                break;
            }
            cur = next[cur];
        }
        chains.push(ForcingChain { nodes });
    }
    Ok(chains)
}

/// Reusable propagation buffers over one graph, addressed by internal index.
pub(crate) struct Propagator<'g> {
    g: &'g Graph,
    observed: Vec<bool>,
    unobserved_nbrs: Vec<u32>,
    work: Vec<usize>,
    count: usize,
}

impl<'g> Propagator<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        let n = g.node_count();
        let mut p = Propagator {
            g,
            observed: vec![false; n],
            unobserved_nbrs: vec![0; n],
            work: Vec::new(),
            count: 0,
        };
        p.reset();
        p
    }

    pub(crate) fn reset(&mut self) {
        self.observed.fill(false);
        for (v, c) in self.unobserved_nbrs.iter_mut().enumerate() {
            *c = self.g.deg(v) as u32;
        }
        self.work.clear();
        self.count = 0;
    }

    pub(crate) fn observe(&mut self, v: usize) {
        if self.observed[v] {
            return;
        }
        self.observed[v] = true;
        self.count += 1;
        if self.unobserved_nbrs[v] == 1 {
            self.work.push(v);
        }
        for &y in self.g.adj(v) {
            self.unobserved_nbrs[y] -= 1;
            if self.observed[y] && self.unobserved_nbrs[y] == 1 {
                self.work.push(y);
            }
        }
    }

    pub(crate) fn dominate(&mut self, pmus: &[usize]) {
        for &v in pmus {
            self.observe(v);
            for &w in self.g.adj(v) {
                self.observe(w);
            }
        }
    }

    /// Applies forces until none remains, optionally recording them.
    pub(crate) fn close(&mut self, mut log: Option<&mut Vec<(usize, usize)>>) {
        let n = self.g.node_count();
        while let Some(u) = self.work.pop() {
            if self.count == n && log.is_none() {
                self.work.clear();
                return;
            }
            if self.unobserved_nbrs[u] != 1 {
                continue;
            }
            let w = *self
                .g
                .adj(u)
                .iter()
                .find(|&&w| !self.observed[w])
                .expect("counter says one unobserved neighbour");
            self.observe(w);
            if let Some(log) = log.as_deref_mut() {
                log.push((u, w));
            }
        }
    }

    /// Full process from scratch; true iff every node ends up observed.
    pub(crate) fn observes_all(&mut self, pmus: &[usize]) -> bool {
        self.reset();
        self.dominate(pmus);
        if self.count == self.g.node_count() {
            return true;
        }
        self.close(None);
        self.count == self.g.node_count()
    }

    /// Runs the full process and leaves the result readable through `observed()`.
    pub(crate) fn run(&mut self, pmus: &[usize]) {
        self.reset();
        self.dominate(pmus);
        self.close(None);
    }

    pub(crate) fn observed(&self) -> &[bool] {
        &self.observed
    }

    fn state(&self, log: Option<&[(usize, usize)]>) -> ObservationState {
        ObservationState {
            observed: self
                .g
                .labels_of((0..self.g.node_count()).filter(|&v| self.observed[v])),
            force_log: log
                .unwrap_or_default()
                .iter()
                .map(|&(u, w)| (self.g.label(u).to_owned(), self.g.label(w).to_owned()))
                .collect(),
        }
    }
}
