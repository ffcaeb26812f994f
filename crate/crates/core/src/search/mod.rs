//! Exact search for minimum power dominating sets.
//!
//! Each connected component is solved on its own. Paths and cycles need one
//! PMU. Otherwise the optimized pipeline contracts the component, fixes the
//! preferred nodes, and tries `pref ∪ S` for subsets `S` of the scored
//! candidate list in increasing size. Every size level is a barrier: a level
//! is exhausted before the next one starts, so the first hit has minimum
//! size. The naive mode skips all pre-processing and tries every subset of
//! the nodes, smallest first, in label order.

mod combinatorics;
mod parallel;

pub use combinatorics::{
    binomial, binomial_big, combination_rank, combination_unrank, next_combination, subset_counts,
};

use num_bigint::BigUint;

use crate::graph::algo::component_blocks;
use crate::graph::{Graph, NodeSet};
use crate::propagation::Propagator;
use crate::reduction::reduce;
use parallel::{find_all, find_first, LevelPlan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Optimized,
    Naive,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Optimized => "optimized",
            Mode::Naive => "naive",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "optimized" => Ok(Mode::Optimized),
            "naive" => Ok(Mode::Naive),
            other => Err(format!("unknown mode {other:?} (expected optimized or naive)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    pub workers: usize,
    pub mode: Mode,
    /// Report the minimum-rank hit of the winning level, independent of scheduling.
    pub deterministic: bool,
    pub chunk_size: u64,
    pub count_subsets: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            workers: default_workers(),
            mode: Mode::Optimized,
            deterministic: true,
            chunk_size: 4096,
            count_subsets: true,
        }
    }
}

impl SolverConfig {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }
}

/// Available processors minus one, at least one.
pub fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get().saturating_sub(1))
        .unwrap_or(1)
        .max(1)
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Diagnostics {
    /// Subsets smaller than the optimum over all nodes.
    pub n_formula: BigUint,
    /// Subsets smaller than the optimum after reduction.
    pub n_prime_formula: BigUint,
    /// Preferred nodes.
    pub p: usize,
    /// Nodes of degree < 3 in the contracted graph.
    pub d: usize,
    /// Redundant, non-preferred nodes of degree >= 3 in the contracted graph.
    pub r: usize,
    pub candidates: usize,
    pub removed_by_contraction: usize,
    /// Subsets tested. In deterministic mode this is the count a sequential
    /// scan would test, so it does not depend on the worker count.
    pub subsets_checked: u128,
    /// Size levels exhausted without a hit, summed over components.
    pub levels_completed: usize,
    /// The candidate list ran out and the component was re-solved naively.
    pub fallback_used: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSolution {
    pub nodes: Vec<String>,
    pub pdn: usize,
    pub pds: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub pdn: usize,
    /// A minimum PDS in original labels: preferred nodes first, then the
    /// search picks, component by component.
    pub pds: Vec<String>,
    pub per_component: Vec<ComponentSolution>,
    pub diagnostics: Diagnostics,
}

impl SolveResult {
    pub fn pds_set(&self) -> NodeSet {
        self.pds.iter().cloned().collect()
    }
}

#[derive(Debug, Default)]
struct ComponentStats {
    contracted_total: usize,
    p: usize,
    d: usize,
    r: usize,
    candidates: usize,
    removed: usize,
    subsets_checked: u128,
    levels_completed: usize,
    fallback_used: bool,
}

pub fn solve(g: &Graph, config: &SolverConfig) -> SolveResult {
    let mut per_component = Vec::new();
    let mut totals = ComponentStats::default();
    for block in component_blocks(g) {
        let comp = g.induced_by_index(&block);
        let (pds, stats) = match config.mode {
            Mode::Optimized => solve_optimized(&comp, config),
            Mode::Naive => solve_naive(&comp, config),
        };
        totals.contracted_total += stats.contracted_total;
        totals.p += stats.p;
        totals.d += stats.d;
        totals.r += stats.r;
        totals.candidates += stats.candidates;
        totals.removed += stats.removed;
        totals.subsets_checked += stats.subsets_checked;
        totals.levels_completed += stats.levels_completed;
        totals.fallback_used |= stats.fallback_used;
        per_component.push(ComponentSolution {
            nodes: comp.labels().to_vec(),
            pdn: pds.len(),
            pds,
        });
    }

    let pdn = per_component.iter().map(|c| c.pdn).sum();
    let pds: Vec<String> = per_component.iter().flat_map(|c| c.pds.iter().cloned()).collect();
    let (n_formula, n_prime_formula) = subset_counts(
        g.node_count(),
        pdn,
        totals.contracted_total,
        totals.p,
        totals.d,
        totals.r,
    );
    SolveResult {
        pdn,
        pds,
        per_component,
        diagnostics: Diagnostics {
            n_formula,
            n_prime_formula,
            p: totals.p,
            d: totals.d,
            r: totals.r,
            candidates: totals.candidates,
            removed_by_contraction: totals.removed,
            subsets_checked: if config.count_subsets { totals.subsets_checked } else { 0 },
            levels_completed: totals.levels_completed,
            fallback_used: totals.fallback_used,
        },
    }
}

/// All minimum power dominating sets of `g`, each sorted by label, in
/// lexicographic order over the label-sorted node list.
///
/// Runs on the input graph itself: contraction keeps the optimum size but
/// not the full family of optimal sets.
pub fn allminpds(g: &Graph, config: &SolverConfig) -> Vec<NodeSet> {
    if g.is_empty() {
        return vec![NodeSet::new()];
    }
    let pdn = solve(g, config).pdn;
    let order = label_order(g);
    let plan = LevelPlan {
        items: order.len(),
        k: pdn,
        workers: config.workers,
        chunk: config.chunk_size,
        deterministic: true,
    };
    find_all(plan, || {
        let mut prop = Propagator::new(g);
        let mut pmus = Vec::with_capacity(pdn);
        let order = &order;
        move |comb: &[usize]| {
            pmus.clear();
            pmus.extend(comb.iter().map(|&i| order[i]));
            prop.observes_all(&pmus)
        }
    })
    .into_iter()
    .map(|comb| g.labels_of(comb.into_iter().map(|i| order[i])))
    .collect()
}

fn label_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| g.label(a).cmp(g.label(b)));
    order
}

fn level_plan(items: usize, k: usize, config: &SolverConfig) -> LevelPlan {
    LevelPlan {
        items,
        k,
        workers: config.workers.max(1),
        chunk: config.chunk_size,
        deterministic: config.deterministic,
    }
}

/// Tries `fixed ∪ S` for every `k`-subset `S` of `pool`, level by level.
/// Returns the winning PMU list (fixed first) and updates the counters.
fn level_search(
    g: &Graph,
    fixed: &[usize],
    pool: &[usize],
    first_k: usize,
    config: &SolverConfig,
    stats: &mut ComponentStats,
) -> Option<Vec<usize>> {
    for k in first_k..=pool.len() {
        let outcome = find_first(level_plan(pool.len(), k, config), || {
            let mut prop = Propagator::new(g);
            let mut pmus = Vec::with_capacity(fixed.len() + k);
            move |comb: &[usize]| {
                pmus.clear();
                pmus.extend_from_slice(fixed);
                pmus.extend(comb.iter().map(|&i| pool[i]));
                prop.observes_all(&pmus)
            }
        });
        match outcome.hit {
            Some((rank, comb)) => {
                stats.subsets_checked += if config.deterministic { rank + 1 } else { outcome.evaluated };
                let mut pmus = fixed.to_vec();
                pmus.extend(comb.iter().map(|&i| pool[i]));
                return Some(pmus);
            }
            None => {
                stats.subsets_checked += outcome.total;
                stats.levels_completed += 1;
            }
        }
    }
    None
}

fn solve_naive(comp: &Graph, config: &SolverConfig) -> (Vec<String>, ComponentStats) {
    let mut stats = ComponentStats {
        contracted_total: comp.node_count(),
        candidates: comp.node_count(),
        ..Default::default()
    };
    let order = label_order(comp);
    let pmus = level_search(comp, &[], &order, 0, config, &mut stats)
        .expect("the full node set always observes everything");
    (pmus.iter().map(|&v| comp.label(v).to_owned()).collect(), stats)
}

fn solve_optimized(comp: &Graph, config: &SolverConfig) -> (Vec<String>, ComponentStats) {
    if comp.max_degree() <= 2 {
        let least = comp.labels().iter().min().expect("components are non-empty").clone();
        let stats = ComponentStats {
            contracted_total: comp.node_count(),
            d: comp.node_count(),
            ..Default::default()
        };
        return (vec![least], stats);
    }

    let report = reduce(comp).expect("component is connected and has a node of degree >= 3");
    let h = &report.contraction.contracted;
    let pref = h.resolve(&report.preferred.pref.iter().collect::<Vec<_>>()).expect("labels of h");
    let pool: Vec<usize> = report
        .candidates
        .iter()
        .map(|c| h.index_of(&c.node).expect("labels of h"))
        .collect();

    let mut is_pref = vec![false; h.node_count()];
    for &v in &pref {
        is_pref[v] = true;
    }
    let redundant_heavy = report
        .redundant
        .iter()
        .filter(|l| {
            let v = h.index_of(l).expect("labels of h");
            h.deg(v) >= 3 && !is_pref[v]
        })
        .count();
    let mut stats = ComponentStats {
        contracted_total: h.node_count(),
        p: pref.len(),
        d: (0..h.node_count()).filter(|&v| h.deg(v) < 3).count(),
        r: redundant_heavy,
        candidates: pool.len(),
        removed: report.contraction.removed.len(),
        ..Default::default()
    };

    if let Some(pmus) = level_search(h, &pref, &pool, 0, config, &mut stats) {
        return (pmus.iter().map(|&v| h.label(v).to_owned()).collect(), stats);
    }

    // Not expected to happen: pref plus every candidate should already be a PDS.
    stats.fallback_used = true;
    let order = label_order(comp);
    let pmus = level_search(comp, &[], &order, 1, config, &mut stats)
        .expect("the full node set always observes everything");
    (pmus.iter().map(|&v| comp.label(v).to_owned()).collect(), stats)
}
