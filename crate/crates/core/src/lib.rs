//! Power domination: minimum PMU placements on undirected networks.
//!
//! The crate computes the power domination number of a graph and a minimum
//! power dominating set by exhaustive search, after shrinking the search
//! space in four steps: contraction of degree-2 runs, fixing of preferred
//! nodes, removal of redundant and low-degree nodes, and ordering of the
//! remaining candidates by a qualitative score. The search itself is spread
//! over worker threads one subset size at a time.
//!
//! ```
//! use pdt_core::{builtin_graph, solve, SolverConfig};
//!
//! let zim = builtin_graph("zim").unwrap();
//! let result = solve(&zim, &SolverConfig::default().with_workers(1));
//! assert_eq!(result.pdn, 2);
//! assert_eq!(result.pds, ["9", "5"]);
//! ```

pub mod error;
pub mod graph;
pub mod propagation;
pub mod reduction;
pub mod search;

pub use error::{PdtError, Result};
pub use graph::{
    articulation_points, bfs_distances, builtin_graph, connected_components, erdos_renyi_connected,
    parse_edge_list, parse_graph6, parse_graph6_many, write_edge_list, write_graph6, Distance,
    DistanceMap, Graph, GraphBuilder, NodeSet, BUILTIN_NAMES,
};
pub use propagation::{
    dominate, forcing_chains, is_power_dominating_set, power_dominate, zero_force, ForcingChain,
    ObservationState,
};
pub use reduction::{
    candidate_list, contract, preferred_nodes, qualitative_scores, redundant_nodes, reduce,
    ContractionReport, ContractionRule, PreferredReport, ReductionReport, Score, ScoredCandidate,
};
pub use search::{
    allminpds, combination_rank, combination_unrank, default_workers, solve, subset_counts,
    Diagnostics, Mode, SolveResult, SolverConfig,
};
