use std::fmt::Write as _;

use num_bigint::BigUint;
use pdt_core::{
    connected_components, reduce, Diagnostics, Distance, Graph, NodeSet, ReductionReport, SolveResult,
};
use serde_json::{json, Value};

/// Integers that may not fit a JSON number are written as strings.
fn big(n: &BigUint) -> Value {
    u64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

fn wide(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| Value::String(n.to_string()), Value::from)
}

pub fn diagnostics_json(d: &Diagnostics) -> Value {
    json!({
        "N": big(&d.n_formula),
        "N_prime": big(&d.n_prime_formula),
        "p": d.p,
        "d": d.d,
        "r": d.r,
        "candidates": d.candidates,
        "removed": d.removed_by_contraction,
        "subsets_checked": wide(d.subsets_checked),
    })
}

pub fn solve_json(r: &SolveResult, timing_ms: f64) -> Value {
    let components: Vec<Value> = r
        .per_component
        .iter()
        .map(|c| json!({ "nodes": c.nodes, "pdn": c.pdn, "pds": c.pds }))
        .collect();
    json!({
        "pdn": r.pdn,
        "pds": r.pds,
        "components": components,
        "diagnostics": diagnostics_json(&r.diagnostics),
        "timing_ms": timing_ms,
    })
}

pub fn sets_json(pdn: usize, sets: &[NodeSet], timing_ms: f64) -> Value {
    json!({ "pdn": pdn, "sets": sets, "timing_ms": timing_ms })
}

pub fn diagnostics_line(d: &Diagnostics) -> String {
    format!(
        "N={} N'={} p={} d={} r={} candidates={} removed={} subsets_checked={}",
        d.n_formula, d.n_prime_formula, d.p, d.d, d.r, d.candidates, d.removed_by_contraction, d.subsets_checked
    )
}

/// Per-component pre-processing, or `None` for paths and cycles which skip it.
pub struct ComponentAnalysis {
    pub nodes: Vec<String>,
    pub reduction: Option<ReductionReport>,
}

pub fn analyze_components(g: &Graph) -> anyhow::Result<Vec<ComponentAnalysis>> {
    connected_components(g)
        .into_iter()
        .map(|nodes| {
            let comp = g.induced_subgraph(&nodes)?;
            let reduction = if comp.max_degree() >= 3 { Some(reduce(&comp)?) } else { None };
            Ok(ComponentAnalysis { nodes, reduction })
        })
        .collect()
}

fn distance_json(d: Distance) -> Value {
    d.hops().map_or(Value::Null, Value::from)
}

fn labels(set: &NodeSet) -> String {
    set.iter().map(String::as_str).collect::<Vec<_>>().join(" ")
}

pub fn analysis_json(parts: &[ComponentAnalysis], r: &SolveResult, timing_ms: f64) -> Value {
    let components: Vec<Value> = parts
        .iter()
        .map(|c| match &c.reduction {
            None => json!({ "nodes": c.nodes, "kind": "path_or_cycle" }),
            Some(rep) => json!({
                "nodes": c.nodes,
                "kind": "general",
                "contraction": {
                    "removed": rep.contraction.removed,
                    "rules": rep.contraction.rules.iter()
                        .map(|(k, v)| (k.clone(), Value::from(v.as_str())))
                        .collect::<serde_json::Map<_, _>>(),
                    "nodes": rep.contraction.contracted.node_count(),
                    "edges": rep.contraction.contracted.edge_count(),
                },
                "preferred": {
                    "b": rep.preferred.b_preferred,
                    "f": rep.preferred.f_preferred,
                    "forts": rep.preferred.forts,
                    "p": rep.preferred.p_preferred,
                    "pref": rep.preferred.pref,
                },
                "redundant": rep.redundant,
                "candidates": rep.candidates.iter().map(|c| json!({
                    "node": c.node,
                    "degree": c.score.degree,
                    "distance": distance_json(c.score.pref_distance),
                    "score": c.score.value().to_string(),
                })).collect::<Vec<_>>(),
            }),
        })
        .collect();
    json!({
        "pdn": r.pdn,
        "pds": r.pds,
        "components": components,
        "diagnostics": diagnostics_json(&r.diagnostics),
        "timing_ms": timing_ms,
    })
}

pub fn analysis_text(g: &Graph, parts: &[ComponentAnalysis], r: &SolveResult) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "graph: {} nodes, {} edges, {} components", g.node_count(), g.edge_count(), parts.len());
    for (i, c) in parts.iter().enumerate() {
        let _ = writeln!(w, "\ncomponent {} ({} nodes)", i + 1, c.nodes.len());
        let Some(rep) = &c.reduction else {
            let _ = writeln!(w, "  path or cycle: any single node observes it");
            continue;
        };
        let h = &rep.contraction.contracted;
        let _ = writeln!(
            w,
            "  contraction: removed {} -> {} nodes, {} edges",
            rep.contraction.removed.len(),
            h.node_count(),
            h.edge_count()
        );
        for (node, rule) in &rep.contraction.rules {
            let _ = writeln!(w, "    {node} {}", rule.as_str());
        }
        let p = &rep.preferred;
        let _ = writeln!(w, "  b-preferred: {}", labels(&p.b_preferred));
        let _ = writeln!(w, "  f-preferred: {}", labels(&p.f_preferred));
        for (v, fort) in &p.forts {
            let _ = writeln!(w, "    fort of {v}: {}", labels(fort));
        }
        let _ = writeln!(w, "  p-preferred: {}", p.p_preferred.as_deref().unwrap_or("-"));
        let _ = writeln!(w, "  pref: {}", labels(&p.pref));
        let _ = writeln!(w, "  redundant: {}", labels(&rep.redundant));
        let _ = writeln!(w, "  candidates ({}):", rep.candidates.len());
        for c in &rep.candidates {
            let dist = c.score.pref_distance.hops().map_or("-".to_string(), |d| d.to_string());
            let _ = writeln!(
                w,
                "    {:<8} score {} ({})  degree {}  distance {}",
                c.node,
                c.score,
                c.score.value(),
                c.score.degree,
                dist
            );
        }
    }
    let _ = writeln!(w, "\npdn: {}", r.pdn);
    let _ = writeln!(w, "pds: {}", r.pds.join(" "));
    let _ = writeln!(w, "diagnostics: {}", diagnostics_line(&r.diagnostics));
    out
}
