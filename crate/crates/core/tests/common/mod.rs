//! Test-only reference implementations. Nothing here calls into the solver's
//! propagation or search code; graphs are read through the public accessors
//! and everything else is recomputed from scratch with bitmasks.

#![allow(dead_code)]

pub mod checks;

use std::collections::BTreeSet;

use pdt_core::{erdos_renyi_connected, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Adjacency bitmasks over the graph's insertion order (n <= 64).
pub struct Masks {
    pub labels: Vec<String>,
    pub nbrs: Vec<u64>,
}

impl Masks {
    pub fn new(g: &Graph) -> Masks {
        let labels: Vec<String> = g.labels().to_vec();
        assert!(labels.len() <= 64);
        let pos = |l: &str| labels.iter().position(|x| x == l).unwrap();
        let nbrs = labels
            .iter()
            .map(|l| g.neighbors(l).unwrap().fold(0u64, |m, w| m | 1 << pos(w)))
            .collect();
        Masks { labels, nbrs }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn full(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    pub fn mask_of<S: AsRef<str>>(&self, set: &[S]) -> u64 {
        set.iter().fold(0, |m, s| {
            m | 1 << self.labels.iter().position(|x| x == s.as_ref()).unwrap()
        })
    }

    pub fn labels_of(&self, mask: u64) -> BTreeSet<String> {
        (0..self.n()).filter(|i| mask >> i & 1 == 1).map(|i| self.labels[i].clone()).collect()
    }

    /// Closed neighbourhoods, then repeated sweeps of the forcing rule.
    pub fn observe(&self, pmus: u64) -> u64 {
        let mut obs = pmus;
        for v in 0..self.n() {
            if pmus >> v & 1 == 1 {
                obs |= self.nbrs[v];
            }
        }
        self.close(obs)
    }

    pub fn close(&self, mut obs: u64) -> u64 {
        loop {
            let mut changed = false;
            for v in 0..self.n() {
                if obs >> v & 1 == 0 {
                    continue;
                }
                let open = self.nbrs[v] & !obs;
                if open.count_ones() == 1 {
                    obs |= open;
                    changed = true;
                }
            }
            if !changed {
                return obs;
            }
        }
    }

    pub fn is_pds(&self, pmus: u64) -> bool {
        self.observe(pmus) == self.full()
    }

    /// Smallest PDS size by trying every mask.
    pub fn brute_pdn(&self) -> usize {
        let n = self.n();
        assert!(n <= 20, "brute force is exponential");
        if n == 0 {
            return 0;
        }
        (0u64..1 << n)
            .filter(|&m| self.is_pds(m))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    /// All PDS masks of a given size.
    pub fn all_pds_of_size(&self, k: usize) -> Vec<u64> {
        (0u64..1 << self.n())
            .filter(|m| m.count_ones() as usize == k && self.is_pds(*m))
            .collect()
    }

    /// Number of components after deleting `skip` (0 for none).
    pub fn components_without(&self, skip: u64) -> usize {
        let mut left = self.full() & !skip;
        let mut count = 0;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let mut grow = comp;
                for v in 0..self.n() {
                    if comp >> v & 1 == 1 {
                        grow |= self.nbrs[v] & left;
                    }
                }
                if grow == comp {
                    break;
                }
                comp = grow;
            }
            left &= !comp;
            count += 1;
        }
        count
    }
}

/// Connected ER graphs with small order, seeded.
pub fn small_connected(seed: u64, max_n: usize, p: f64) -> Graph {
    let n = 2 + (seed as usize * 7919) % (max_n - 1);
    erdos_renyi_connected(n, p, seed).unwrap()
}

/// A dense connected core with a node of degree >= 3, decorated with pendant
/// paths and subdivided edges, at most `max_n` nodes. These exercise the
/// contraction rules far more often than plain sparse random graphs.
pub fn decorated(seed: u64, max_n: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core_n = rng.gen_range(4..=6.min(max_n));
    let core = (0..)
        .map(|i| erdos_renyi_connected(core_n, 0.6, seed.wrapping_mul(31).wrapping_add(i)).unwrap())
        .find(|g| g.max_degree() >= 3)
        .unwrap();
    let mut edges: Vec<(usize, usize)> = core
        .edges()
        .map(|(u, v)| (u.parse().unwrap(), v.parse().unwrap()))
        .collect();
    let mut n = core_n;
    while n < max_n && rng.gen_bool(0.8) {
        let len = rng.gen_range(1..=3.min(max_n - n));
        if rng.gen_bool(0.5) {
            let mut at = rng.gen_range(0..n);
            for _ in 0..len {
                edges.push((at, n));
                at = n;
                n += 1;
            }
        } else {
            let (u, v) = edges.swap_remove(rng.gen_range(0..edges.len()));
            let mut at = u;
            for _ in 0..len {
                edges.push((at, n));
                at = n;
                n += 1;
            }
            edges.push((at, v));
        }
    }
    let mut b = Graph::builder();
    for i in 0..n {
        b.add_node(&i.to_string());
    }
    for (u, v) in edges {
        b.add_edge(&u.to_string(), &v.to_string()).unwrap();
    }
    b.build()
}

pub fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}
