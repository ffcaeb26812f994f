//! Property checks shared by the proptest suite and the acceptance runner.
//! Each returns `Err` with a description of the first violation.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::Ratio;
use pdt_core::{
    articulation_points, candidate_list, combination_rank, combination_unrank, contract, dominate,
    is_power_dominating_set, parse_graph6, power_dominate, preferred_nodes, qualitative_scores,
    redundant_nodes, solve, write_graph6, zero_force, Graph, Mode, SolverConfig,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Masks;

pub type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// A random subset of the nodes, each kept with probability `p`.
pub fn random_subset(g: &Graph, rng: &mut ChaCha8Rng, p: f64) -> Vec<String> {
    g.labels().iter().filter(|_| rng.gen_bool(p)).cloned().collect()
}

pub fn monotone(g: &Graph, s: &[String], extra: &[String]) -> Check {
    let small = power_dominate(g, s).unwrap().observed;
    let both: Vec<String> = s.iter().chain(extra).cloned().collect();
    let big = power_dominate(g, &both).unwrap().observed;
    ensure(small.is_subset(&big), || format!("observe({s:?}) not inside observe({both:?})"))
}

/// The library closure agrees with forcing in a random order and with the
/// mask oracle.
pub fn closure_order_independent(g: &Graph, s: &[String], seed: u64) -> Check {
    let m = Masks::new(g);
    let lib = power_dominate(g, s).unwrap().observed;
    let oracle = m.labels_of(m.observe(m.mask_of(s)));
    ensure(lib == oracle, || format!("library {lib:?} vs oracle {oracle:?} for {s:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pmus = m.mask_of(s);
    let mut obs = (0..m.n()).filter(|v| pmus >> v & 1 == 1).fold(pmus, |o, v| o | m.nbrs[v]);
    let mut order: Vec<usize> = (0..m.n()).collect();
    loop {
        order.shuffle(&mut rng);
        let fired = order.iter().find(|&&v| {
            obs >> v & 1 == 1 && (m.nbrs[v] & !obs).count_ones() == 1
        });
        match fired {
            Some(&v) => obs |= m.nbrs[v],
            None => break,
        }
    }
    let shuffled = m.labels_of(obs);
    ensure(lib == shuffled, || format!("random-order closure {shuffled:?} vs {lib:?}"))
}

pub fn closure_idempotent(g: &Graph, s: &[String]) -> Check {
    let once = zero_force(g, &dominate(g, s).unwrap()).unwrap();
    let twice = zero_force(g, &once).unwrap();
    ensure(once.observed == twice.observed, || format!("closure of {s:?} not idempotent"))?;
    ensure(twice.force_log.len() == once.force_log.len(), || "second closure forced again".into())
}

/// Replays the force log against the rule: the forcer is observed and the
/// target is its only unobserved neighbour at that moment.
pub fn force_log_valid(g: &Graph, s: &[String]) -> Check {
    let state = power_dominate(g, s).unwrap();
    let mut obs: BTreeSet<String> = dominate(g, s).unwrap().observed;
    for (u, v) in &state.force_log {
        ensure(obs.contains(u), || format!("forcer {u} not observed"))?;
        let open: Vec<&str> = g.neighbors(u).unwrap().filter(|w| !obs.contains(*w)).collect();
        ensure(open == [v.as_str()], || format!("{u} -> {v} with unobserved {open:?}"))?;
        obs.insert(v.clone());
    }
    ensure(obs == state.observed, || "log does not reproduce observed set".into())
}

pub fn articulation_matches_oracle(g: &Graph) -> Check {
    let m = Masks::new(g);
    let base = m.components_without(0);
    let oracle: BTreeSet<String> = (0..m.n())
        .filter(|&v| m.components_without(1 << v) > base)
        .map(|v| m.labels[v].clone())
        .collect();
    let lib = articulation_points(g);
    ensure(lib == oracle, || format!("articulation {lib:?} vs oracle {oracle:?}"))
}

pub fn graph6_round_trip(g: &Graph) -> Check {
    let text = write_graph6(g);
    let back = parse_graph6(&text).map_err(|e| e.to_string())?;
    ensure(&back == g, || format!("{} did not round-trip", String::from_utf8_lossy(&text)))?;
    ensure(write_graph6(&back) == text, || "re-encoding differs".into())
}

pub fn degree_sum(g: &Graph) -> Check {
    let total: usize = g.labels().iter().map(|l| g.degree(l).unwrap()).sum();
    ensure(total == 2 * g.edge_count(), || "degree sum mismatch".into())
}

/// Contraction keeps the optimum, its output is already contracted, and a PDS
/// of the contracted graph is one of the original too.
pub fn contraction_invariant(g: &Graph) -> Check {
    let report = contract(g).map_err(|e| e.to_string())?;
    let h = &report.contracted;
    let (before, after) = (Masks::new(g).brute_pdn(), Masks::new(h).brute_pdn());
    ensure(before == after, || format!("pdn {before} before contraction, {after} after"))?;
    let again = contract(h).unwrap();
    ensure(again.removed.is_empty() && &again.contracted == h, || "contraction not idempotent".into())?;
    let hm = Masks::new(h);
    let lifted = hm.all_pds_of_size(after).into_iter().all(|mask| {
        let pds: Vec<String> = hm.labels_of(mask).into_iter().collect();
        is_power_dominating_set(g, &pds).unwrap()
    });
    ensure(lifted, || "a minimum PDS of the contracted graph fails on the original".into())
}

/// The preferred set sits inside some minimum PDS, and a p-preferred node is
/// a PDS by itself.
pub fn preferred_sound(h: &Graph) -> Check {
    let report = preferred_nodes(h).map_err(|e| e.to_string())?;
    let m = Masks::new(h);
    let pdn = m.brute_pdn();
    if let Some(p) = &report.p_preferred {
        ensure(m.is_pds(m.mask_of(&[p])), || format!("p-preferred {p} is not a PDS"))?;
    }
    let pref: Vec<&String> = report.pref.iter().collect();
    let pm = m.mask_of(&pref);
    let contained = (0u64..1 << m.n()).any(|s| s & pm == pm && s.count_ones() as usize == pdn && m.is_pds(s));
    ensure(contained, || format!("no minimum PDS contains pref {:?}", report.pref))
}

/// Literal fort condition for each f-preferred node `v` with fort `U`: every
/// node of `U` is observed by `{v}`, `U` has no neighbour outside `U ∪ {v}`,
/// and `v` has at least two edges into `U`.
pub fn forts_sound(h: &Graph) -> Check {
    let report = preferred_nodes(h).map_err(|e| e.to_string())?;
    let m = Masks::new(h);
    for (v, fort) in &report.forts {
        let obs = m.observe(m.mask_of(&[v]));
        let u = m.mask_of(&fort.iter().collect::<Vec<_>>());
        let vm = m.mask_of(&[v]);
        ensure(obs & u == u, || format!("fort of {v} not observed by {v}"))?;
        for w in (0..m.n()).filter(|w| u >> w & 1 == 1) {
            ensure(m.nbrs[w] & !(u | vm) == 0, || format!("fort of {v} leaks at {}", m.labels[w]))?;
        }
        let into = (m.nbrs[vm.trailing_zeros() as usize] & u).count_ones();
        ensure(into >= 2, || format!("{v} has {into} edges into its fort"))?;
    }
    Ok(())
}

/// Adding a redundant node to any PMU set that contains pref changes nothing.
pub fn redundant_no_effect(h: &Graph, extra: &[String]) -> Check {
    let report = preferred_nodes(h).map_err(|e| e.to_string())?;
    let pref: Vec<String> = report.pref.iter().cloned().collect();
    let base: Vec<String> = pref.iter().chain(extra).cloned().collect();
    let m = Masks::new(h);
    let before = m.observe(m.mask_of(&base));
    for r in redundant_nodes(h, &pref).unwrap() {
        let mut with = base.clone();
        with.push(r.clone());
        let after = m.observe(m.mask_of(&with));
        ensure(before == after, || format!("redundant {r} changed observation of {base:?}"))?;
    }
    Ok(())
}

/// Candidate order equals a sort by the exact rational score.
pub fn score_order(h: &Graph) -> Check {
    let report = preferred_nodes(h).map_err(|e| e.to_string())?;
    let pref: Vec<&String> = report.pref.iter().collect();
    let scores = qualitative_scores(h, &pref).unwrap();
    let lib: Vec<String> = candidate_list(h, &pref).unwrap().into_iter().map(|c| c.node).collect();
    let mut by_value: Vec<(Ratio<u64>, String)> =
        lib.iter().map(|n| (scores[n].score.value(), n.clone())).collect();
    by_value.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let oracle: Vec<String> = by_value.into_iter().map(|(_, n)| n).collect();
    ensure(lib == oracle, || format!("order {lib:?} vs exact {oracle:?}"))?;
    for (n, c) in &scores {
        let d = bfs_to_set(h, n, &report.pref);
        let expect = match d {
            Some(d) => Ratio::from_integer(h.degree(n).unwrap() as u64) + Ratio::new(d, d + 1),
            None => Ratio::from_integer(h.degree(n).unwrap() as u64 + 1),
        };
        ensure(c.score.value() == expect, || format!("score of {n}: {} vs {expect}", c.score.value()))?;
    }
    Ok(())
}

fn bfs_to_set(g: &Graph, from: &str, targets: &BTreeSet<String>) -> Option<u64> {
    let mut seen = BTreeSet::from([from.to_owned()]);
    let mut frontier = vec![from.to_owned()];
    let mut d = 0;
    while !frontier.is_empty() {
        if frontier.iter().any(|v| targets.contains(v)) {
            return Some(d);
        }
        let mut next = Vec::new();
        for v in &frontier {
            for w in g.neighbors(v).unwrap() {
                if seen.insert(w.to_owned()) {
                    next.push(w.to_owned());
                }
            }
        }
        frontier = next;
        d += 1;
    }
    None
}

/// Exhaustive bijection between ranks and lexicographic combinations.
pub fn rank_unrank_bijection(max_n: usize) -> Check {
    for n in 0..=max_n {
        for k in 0..=n {
            let mut expected: Vec<Vec<usize>> = (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
                .collect();
            expected.sort();
            for (rank, comb) in expected.iter().enumerate() {
                let got = combination_unrank(n, k, rank as u128).map_err(|e| e.to_string())?;
                ensure(&got == comb, || format!("unrank({n},{k},{rank}) = {got:?}, want {comb:?}"))?;
                let back = combination_rank(n, comb).map_err(|e| e.to_string())?;
                ensure(back == rank as u128, || format!("rank({n},{comb:?}) = {back}, want {rank}"))?;
            }
            ensure(combination_unrank(n, k, expected.len() as u128).is_err(), || {
                format!("unrank({n},{k}) accepted out-of-range rank")
            })?;
        }
    }
    Ok(())
}

/// Optimized, naive and brute force agree, and the returned sets verify.
pub fn solvers_agree(g: &Graph, workers: usize) -> Check {
    let oracle = Masks::new(g).brute_pdn();
    for mode in [Mode::Optimized, Mode::Naive] {
        let r = solve(g, &SolverConfig::default().with_workers(workers).with_mode(mode));
        ensure(r.pdn == oracle, || format!("{} pdn {} vs oracle {oracle}", mode.as_str(), r.pdn))?;
        ensure(r.pds.len() == r.pdn, || format!("{} pds size {}", mode.as_str(), r.pds.len()))?;
        ensure(is_power_dominating_set(g, &r.pds).unwrap(), || {
            format!("{} pds {:?} does not verify", mode.as_str(), r.pds)
        })?;
        ensure(!r.diagnostics.fallback_used, || "fallback search used".into())?;
        ensure(r.diagnostics.n_prime_formula <= r.diagnostics.n_formula, || "N' > N".into())?;
    }
    Ok(())
}
