//! Binomials, colexicographic subset enumeration over `u128` masks, and
//! rank-range partitioning for parallel sweeps.
//!
//! Colex order on k-subsets of `{0..n-1}` coincides with numeric order of the
//! bit masks, so Gosper's successor walks it directly. The rank of a subset
//! `c_0 < c_1 < … < c_{k-1}` is `Σ C(c_i, i+1)`.

use std::sync::OnceLock;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Environment variable holding the worker count for parallel sweeps.
pub const THREADS_ENV: &str = "STOPRED_THREADS";

/// Exact binomial coefficient; zero when `k > n`. Panics on `u128` overflow.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        let num = (n - i) as u128;
        let den = (i + 1) as u128;
        let g = gcd(acc, den);
        let (a, d) = (acc / g, den / g);
        acc = a.checked_mul(num / d).expect("binomial overflows u128");
        // d always divides num here after the reduction above
        debug_assert_eq!(num % d, 0);
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u8);
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// `Σ_{j=lo}^{hi} C(n, j)`.
pub fn binomial_sum(n: usize, lo: usize, hi: usize) -> u128 {
    (lo..=hi).map(|j| binomial(n, j)).sum()
}

pub fn check_guard(what: &'static str, needed: u128, limit: u128) -> Result<()> {
    if needed > limit {
        Err(Error::GuardExceeded { what, needed, limit })
    } else {
        Ok(())
    }
}

#[inline]
pub fn first_subset(k: usize) -> u128 {
    if k == 0 {
        0
    } else if k >= 128 {
        u128::MAX
    } else {
        (1u128 << k) - 1
    }
}

/// Next mask with the same popcount in numeric (colex) order.
#[inline]
pub fn next_subset(x: u128) -> u128 {
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    (((r ^ x) >> 2) >> c.trailing_zeros()) | r
}

pub fn colex_rank(mask: u128) -> u128 {
    let mut rank = 0;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let c = m.trailing_zeros() as usize;
        rank += binomial(c, i + 1);
        m &= m - 1;
        i += 1;
    }
    rank
}

/// Inverse of [`colex_rank`] for k-subsets.
pub fn colex_unrank(mut rank: u128, k: usize) -> u128 {
    let mut mask = 0u128;
    for i in (1..=k).rev() {
        // largest c with C(c, i) <= rank
        let mut c = i - 1;
        while binomial(c + 1, i) <= rank {
            c += 1;
        }
        rank -= binomial(c, i);
        mask |= 1u128 << c;
    }
    mask
}

/// Iterator over a contiguous colex rank range of k-subsets of `{0..n-1}`.
#[derive(Clone, Debug)]
pub struct Subsets {
    cur: u128,
    remaining: u128,
}

impl Subsets {
    pub fn all(n: usize, k: usize) -> Result<Self> {
        Subsets::range(n, k, 0, binomial(n, k))
    }

    pub fn range(n: usize, k: usize, start: u128, count: u128) -> Result<Self> {
        if n > 128 {
            return Err(Error::LengthTooLarge(n));
        }
        let total = binomial(n, k);
        let count = count.min(total.saturating_sub(start));
        Ok(Subsets {
            cur: if count > 0 { colex_unrank(start, k) } else { 0 },
            remaining: count,
        })
    }
}

impl Iterator for Subsets {
    type Item = u128;

    #[inline]
    fn next(&mut self) -> Option<u128> {
        if self.remaining == 0 {
            return None;
        }
        let out = self.cur;
        self.remaining -= 1;
        if self.remaining > 0 {
            self.cur = next_subset(out);
        }
        Some(out)
    }
}

/// Cyclic rotation of an `n`-bit mask: bit `i` moves to `(i + s) mod n`.
#[inline]
pub fn rotate_mask(m: u128, s: usize, n: usize) -> u128 {
    let s = s % n;
    if s == 0 {
        return m;
    }
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    ((m << s) | (m >> (n - s))) & full
}

/// Indices of the set bits of a mask, ascending.
pub fn mask_indices(mut m: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub fn indices_mask(idx: &[usize]) -> u128 {
    idx.iter().fold(0, |m, &i| m | (1u128 << i))
}

/// Shared worker pool sized from [`THREADS_ENV`], defaulting to the available parallelism.
pub fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let threads = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&t| t > 0)
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
    })
}

/// Splits `0..total` into at most `parts` contiguous `(start, len)` ranges.
pub fn rank_ranges(total: u128, parts: usize) -> Vec<(u128, u128)> {
    let parts = (parts.max(1) as u128).min(total.max(1));
    let base = total / parts;
    let extra = total % parts;
    let mut out = Vec::with_capacity(parts as usize);
    let mut start = 0;
    for p in 0..parts {
        let len = base + u128::from(p < extra);
        out.push((start, len));
        start += len;
    }
    out
}

fn chunk_count(total: u128) -> usize {
    let threads = pool().current_num_threads();
    if threads == 1 || total < 4096 {
        1
    } else {
        threads * 8
    }
}

/// Parallel fold over every k-subset mask; per-range accumulators are merged with `merge`.
pub fn par_fold_subsets<A, F, M>(n: usize, k: usize, init: A, fold: F, merge: M) -> Result<A>
where
    A: Send + Sync + Clone,
    F: Fn(A, u128) -> A + Sync,
    M: Fn(A, A) -> A + Sync,
{
    if n > 128 {
        return Err(Error::LengthTooLarge(n));
    }
    let total = binomial(n, k);
    let ranges = rank_ranges(total, chunk_count(total));
    if ranges.len() == 1 {
        return Ok(Subsets::all(n, k)?.fold(init, &fold));
    }
    let parts: Vec<A> = pool().install(|| {
        ranges
            .par_iter()
            .map(|&(start, len)| {
                Subsets::range(n, k, start, len)
                    .expect("n checked")
                    .fold(init.clone(), &fold)
            })
            .collect()
    });
    Ok(parts.into_iter().fold(init, &merge))
}

/// Number of k-subsets satisfying `pred`.
pub fn par_count_subsets<P>(n: usize, k: usize, pred: P) -> Result<u128>
where
    P: Fn(u128) -> bool + Sync,
{
    par_fold_subsets(n, k, 0u128, |acc, m| acc + u128::from(pred(m)), |a, b| a + b)
}

/// Smallest-rank k-subset satisfying `pred`, if any.
pub fn par_find_subset<P>(n: usize, k: usize, pred: P) -> Result<Option<u128>>
where
    P: Fn(u128) -> bool + Sync,
{
    if n > 128 {
        return Err(Error::LengthTooLarge(n));
    }
    let total = binomial(n, k);
    let ranges = rank_ranges(total, chunk_count(total));
    let found: Vec<Option<u128>> = pool().install(|| {
        ranges
            .par_iter()
            .map(|&(start, len)| Subsets::range(n, k, start, len).expect("n checked").find(|&m| pred(m)))
            .collect()
    });
    Ok(found.into_iter().flatten().next())
}
