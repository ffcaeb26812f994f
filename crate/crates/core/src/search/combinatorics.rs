use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{PdtError, Result};

/// `C(n, k)`, or `None` if it does not fit in 128 bits.
pub fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) because acc = C(n, i)
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

pub fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// The `rank`-th `k`-subset of `0..n` in lexicographic order.
pub fn combination_unrank(n: usize, k: usize, rank: u128) -> Result<Vec<usize>> {
    let total = binomial(n, k)
        .ok_or_else(|| PdtError::Parameter(format!("C({n}, {k}) exceeds 128 bits")))?;
    if rank >= total {
        return Err(PdtError::Parameter(format!(
            "rank {rank} out of range for C({n}, {k}) = {total}"
        )));
    }
    let mut out = Vec::with_capacity(k);
    let mut r = rank;
    let mut x = 0;
    for i in 0..k {
        loop {
            // combinations whose i-th element is x
            let block = binomial(n - 1 - x, k - 1 - i).expect("bounded by C(n, k)");
            if r < block {
                out.push(x);
                x += 1;
                break;
            }
            r -= block;
            x += 1;
        }
    }
    Ok(out)
}

/// Lexicographic rank of a strictly increasing `k`-subset of `0..n`.
pub fn combination_rank(n: usize, comb: &[usize]) -> Result<u128> {
    let k = comb.len();
    if comb.windows(2).any(|w| w[0] >= w[1]) || comb.last().is_some_and(|&c| c >= n) {
        return Err(PdtError::Parameter(format!(
            "{comb:?} is not an increasing subset of 0..{n}"
        )));
    }
    let mut rank = 0u128;
    let mut x = 0;
    for (i, &c) in comb.iter().enumerate() {
        while x < c {
            rank += binomial(n - 1 - x, k - 1 - i)
                .ok_or_else(|| PdtError::Parameter("rank exceeds 128 bits".into()))?;
            x += 1;
        }
        x = c + 1;
    }
    Ok(rank)
}

/// Advances to the lexicographic successor; false after the last subset.
pub fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let Some(i) = (0..k).rev().find(|&i| comb[i] < n - k + i) else {
        return false;
    };
    comb[i] += 1;
    for j in i + 1..k {
        comb[j] = comb[j - 1] + 1;
    }
    true
}

/// Subsets below the optimum size examined by a plain search (`N`) and by
/// the reduced search (`N'`).
///
/// `N  = Σ_{i=0}^{pdn-1}   C(nodes_total, i)`
/// `N' = Σ_{i=0}^{pdn-1-p} C(contracted_total - p - d - r, i)`, zero when `pdn - 1 - p < 0`.
pub fn subset_counts(
    nodes_total: usize,
    pdn: usize,
    contracted_total: usize,
    p: usize,
    d: usize,
    r: usize,
) -> (BigUint, BigUint) {
    let n = (0..pdn).map(|i| binomial_big(nodes_total, i)).sum();
    let pool = contracted_total.saturating_sub(p + d + r);
    let n_prime = match pdn.checked_sub(1 + p) {
        Some(top) => (0..=top).map(|i| binomial_big(pool, i)).sum(),
        None => BigUint::zero(),
    };
    (n, n_prime)
}
