//! Work distribution for one subset-size level.
//!
//! The `C(items, k)` subsets are numbered by lexicographic rank and cut into
//! fixed-size chunks. Workers claim chunk indices from a shared atomic
//! cursor, unrank the chunk start once and walk successors from there.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::thread;

use super::combinatorics::{binomial, combination_unrank, next_combination};

#[derive(Debug, Clone, Copy)]
pub(crate) struct LevelPlan {
    pub items: usize,
    pub k: usize,
    pub workers: usize,
    pub chunk: u64,
    /// Return the minimum-rank hit rather than the first one found.
    pub deterministic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LevelOutcome {
    pub hit: Option<(u128, Vec<usize>)>,
    /// Level size.
    pub total: u128,
    /// Subsets actually tested, across all workers.
    pub evaluated: u128,
}

fn level_total(plan: &LevelPlan) -> u128 {
    binomial(plan.items, plan.k).unwrap_or_else(|| {
        panic!("C({}, {}) exceeds 128 bits; level is not enumerable", plan.items, plan.k)
    })
}

/// Searches one level for a subset accepted by the tester.
///
/// `make_tester` is called once per worker so each gets private scratch
/// buffers. With `deterministic`, chunks below the best hit so far are always
/// finished, so the minimum-rank hit is returned regardless of scheduling.
/// Otherwise a stop flag is raised on the first hit and polled at chunk
/// boundaries.
pub(crate) fn find_first<M, T>(plan: LevelPlan, make_tester: M) -> LevelOutcome
where
    M: Fn() -> T + Sync,
    T: FnMut(&[usize]) -> bool,
{
    let total = level_total(&plan);
    let chunk = plan.chunk.max(1);
    let cursor = AtomicU64::new(0);
    let best_chunk = AtomicU64::new(u64::MAX);
    let stop = AtomicBool::new(false);
    let evaluated = AtomicU64::new(0);
    let best: Mutex<Option<(u128, Vec<usize>)>> = Mutex::new(None);

    let work = || {
        let mut test = make_tester();
        loop {
            let c = cursor.fetch_add(1, Ordering::Relaxed);
            let start = u128::from(c) * u128::from(chunk);
            if start >= total {
                break;
            }
            if plan.deterministic {
                if c > best_chunk.load(Ordering::Acquire) {
                    break;
                }
            } else if stop.load(Ordering::Acquire) {
                break;
            }
            let end = (start + u128::from(chunk)).min(total);
            let mut comb = combination_unrank(plan.items, plan.k, start).expect("start < total");
            let mut rank = start;
            let mut tested = 0u64;
            loop {
                tested += 1;
                if test(&comb) {
                    let mut slot = best.lock().expect("poisoned");
                    if slot.as_ref().is_none_or(|(r, _)| rank < *r) {
                        *slot = Some((rank, comb.clone()));
                    }
                    best_chunk.fetch_min(c, Ordering::AcqRel);
                    stop.store(true, Ordering::Release);
                    break;
                }
                rank += 1;
                if rank >= end {
                    break;
                }
                next_combination(&mut comb, plan.items);
            }
            evaluated.fetch_add(tested, Ordering::Relaxed);
        }
    };

    run_workers(plan.workers, &work);

    LevelOutcome {
        hit: best.into_inner().expect("poisoned"),
        total,
        evaluated: u128::from(evaluated.into_inner()),
    }
}

/// Every accepted subset of the level, in rank order.
pub(crate) fn find_all<M, T>(plan: LevelPlan, make_tester: M) -> Vec<Vec<usize>>
where
    M: Fn() -> T + Sync,
    T: FnMut(&[usize]) -> bool,
{
    let total = level_total(&plan);
    let chunk = plan.chunk.max(1);
    let cursor = AtomicU64::new(0);
    let hits: Mutex<Vec<(u128, Vec<usize>)>> = Mutex::new(Vec::new());

    let work = || {
        let mut test = make_tester();
        let mut local = Vec::new();
        loop {
            let c = cursor.fetch_add(1, Ordering::Relaxed);
            let start = u128::from(c) * u128::from(chunk);
            if start >= total {
                break;
            }
            let end = (start + u128::from(chunk)).min(total);
            let mut comb = combination_unrank(plan.items, plan.k, start).expect("start < total");
            let mut rank = start;
            loop {
                if test(&comb) {
                    local.push((rank, comb.clone()));
                }
                rank += 1;
                if rank >= end {
                    break;
                }
                next_combination(&mut comb, plan.items);
            }
        }
        hits.lock().expect("poisoned").append(&mut local);
    };

    run_workers(plan.workers, &work);

    let mut hits = hits.into_inner().expect("poisoned");
    hits.sort_unstable_by_key(|(r, _)| *r);
    hits.into_iter().map(|(_, c)| c).collect()
}

fn run_workers<F: Fn() + Sync>(workers: usize, work: &F) {
    if workers <= 1 {
        work();
        return;
    }
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(work);
        }
    });
}
