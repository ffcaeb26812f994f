use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algo::component_ids;
use super::Graph;
use crate::error::{PdtError, Result};

const MAX_ATTEMPTS: u64 = 1_000_000;

/// Samples G(n, p) until the result is connected.
///
/// Attempt `k` draws from the ChaCha stream `k` of `seed`, so the output for a
/// given `(n, p, seed)` never depends on how sampling was scheduled.
pub fn erdos_renyi_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(PdtError::Parameter("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(PdtError::Parameter(format!("edge probability {p} outside [0, 1]")));
    }
    if p == 0.0 && n > 1 {
        return Err(PdtError::Parameter(
            "p = 0 never yields a connected graph on more than one node".into(),
        ));
    }
    for attempt in 0..MAX_ATTEMPTS {
        let g = sample(n, p, seed, attempt);
        let (_, count) = component_ids(&g);
        if count == 1 {
            return Ok(g);
        }
    }
    Err(PdtError::Parameter(format!(
        "no connected G({n}, {p}) after {MAX_ATTEMPTS} attempts"
    )))
}

fn sample(n: usize, p: f64, seed: u64, attempt: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt);
    let labels = (0..n).map(|i| i.to_string()).collect();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for ns in &mut adj {
        ns.sort_unstable();
    }
    Graph::from_parts(labels, adj)
}
