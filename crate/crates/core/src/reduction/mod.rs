//! Pre-processing that shrinks the search: contraction of degree-2 runs,
//! preferred nodes, redundant nodes and the scored candidate order.

mod contraction;
mod preferred;
mod scoring;

pub use contraction::{contract, ContractionReport, ContractionRule};
pub use preferred::{preferred_nodes, PreferredReport};
pub use scoring::{candidate_list, qualitative_scores, redundant_nodes, Score, ScoredCandidate};

use crate::error::Result;
use crate::graph::{Graph, NodeSet};

/// Everything the optimized search derives from one connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub contraction: ContractionReport,
    pub preferred: PreferredReport,
    pub redundant: NodeSet,
    pub candidates: Vec<ScoredCandidate>,
}

/// Runs the whole pre-processing pipeline on a connected graph that has a
/// node of degree at least 3.
pub fn reduce(g: &Graph) -> Result<ReductionReport> {
    let contraction = contract(g)?;
    let h = &contraction.contracted;
    let preferred = preferred_nodes(h)?;
    let pref: Vec<&String> = preferred.pref.iter().collect();
    let redundant = redundant_nodes(h, &pref)?;
    let candidates = candidate_list(h, &pref)?;
    Ok(ReductionReport {
        contraction,
        preferred,
        redundant,
        candidates,
    })
}
