//! Small reference networks used throughout the tests and the CLI.

use super::Graph;
use crate::error::{PdtError, Result};

pub const BUILTIN_NAMES: &[&str] = &["tadpole", "zim", "mutated_zim", "fig3", "ieee39"];

const TADPOLE: &[(&str, &str)] = &[
    ("v2", "v1"),
    ("v1", "v3"),
    ("v3", "v6"),
    ("v6", "v2"),
    ("v3", "v4"),
    ("v4", "v5"),
];

const ZIM: &[(&str, &str)] = &[
    ("4", "5"),
    ("5", "9"),
    ("9", "10"),
    ("9", "11"),
    ("7", "9"),
    ("6", "9"),
    ("5", "6"),
    ("6", "7"),
    ("7", "8"),
    ("3", "7"),
    ("3", "2"),
    ("2", "6"),
    ("1", "5"),
    ("1", "2"),
    ("10", "11"),
];

// Zim with a 4-node tail on 5, a 2-node tail on 7 and the 10-11 edge
// subdivided by 16..19.
const MUTATED_ZIM: &[(&str, &str)] = &[
    ("15", "14"),
    ("14", "13"),
    ("13", "4"),
    ("4", "5"),
    ("5", "9"),
    ("9", "10"),
    ("10", "16"),
    ("16", "17"),
    ("17", "18"),
    ("18", "19"),
    ("19", "11"),
    ("9", "11"),
    ("7", "9"),
    ("6", "9"),
    ("5", "6"),
    ("6", "7"),
    ("7", "8"),
    ("8", "12"),
    ("3", "7"),
    ("3", "2"),
    ("2", "6"),
    ("1", "5"),
    ("1", "2"),
];

const FIG3: &[(&str, &str)] = &[("3", "2"), ("1", "2"), ("3", "1"), ("2", "5"), ("1", "4")];

// New England 39-bus system, bus-to-bus connections only.
const IEEE39: &[(&str, &str)] = &[
    ("1", "2"),
    ("1", "39"),
    ("2", "3"),
    ("2", "25"),
    ("2", "30"),
    ("39", "9"),
    ("3", "4"),
    ("3", "18"),
    ("25", "26"),
    ("25", "37"),
    ("9", "8"),
    ("4", "5"),
    ("4", "14"),
    ("18", "17"),
    ("26", "27"),
    ("26", "28"),
    ("26", "29"),
    ("5", "6"),
    ("5", "8"),
    ("14", "13"),
    ("14", "15"),
    ("17", "16"),
    ("17", "27"),
    ("6", "7"),
    ("6", "11"),
    ("6", "31"),
    ("8", "7"),
    ("13", "10"),
    ("13", "12"),
    ("15", "16"),
    ("11", "10"),
    ("11", "12"),
    ("10", "32"),
    ("16", "19"),
    ("16", "21"),
    ("16", "24"),
    ("19", "20"),
    ("19", "33"),
    ("21", "22"),
    ("24", "23"),
    ("20", "34"),
    ("22", "23"),
    ("22", "35"),
    ("23", "36"),
    ("28", "29"),
    ("29", "38"),
];

/// Returns one of the reference networks listed in [`BUILTIN_NAMES`].
///
/// Numeric-labelled networks insert their nodes in numeric order so that
/// output listings read naturally.
pub fn builtin_graph(name: &str) -> Result<Graph> {
    let (edges, numeric) = match name {
        "tadpole" => (TADPOLE, 0),
        "zim" => (ZIM, 11),
        "mutated_zim" => (MUTATED_ZIM, 19),
        "fig3" => (FIG3, 5),
        "ieee39" => (IEEE39, 39),
        _ => {
            return Err(PdtError::NotFound(format!(
                "builtin graph {name:?} (known: {})",
                BUILTIN_NAMES.join(", ")
            )))
        }
    };
    let mut b = Graph::builder();
    if numeric == 0 {
        for i in 1..=6 {
            b.add_node(&format!("v{i}"));
        }
    } else {
        for i in 1..=numeric {
            b.add_node(&i.to_string());
        }
    }
    for &(u, v) in edges {
        b.add_edge(u, v)?;
    }
    Ok(b.build())
}
