//! Binomial coefficients and colexicographic indexing.
//!
//! Edges and k-subsets are identified with integers through colex order:
//! the edge `{i, j}` with `i < j` has index `j(j-1)/2 + i`, and the
//! k-subset `{s_1 < ... < s_k}` has rank `sum_t C(s_t, t)`.  Both orders
//! sort by the largest element first, which is what makes the "first
//! `C(m,2)` edge slots are the edges on the first `m` vertices" property
//! hold.

use num_bigint::BigInt;
use num_traits::One;

/// Exact binomial coefficient in `u128`; panics on overflow, which cannot
/// happen for the `n <= 64` arguments used internally.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 1..=k {
        acc = acc
            .checked_mul((n - k + t) as u128)
            .expect("binomial overflow")
            / t as u128;
    }
    acc
}

/// Binomial coefficient as a big integer, for bounds that exceed `u128`.
pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 1..=k {
        acc = acc * BigInt::from(n - k + t) / BigInt::from(t);
    }
    acc
}

/// Parity of `C(n, k)` by Lucas' theorem: odd exactly when every binary
/// digit of `k` is at most the corresponding digit of `n`.
#[inline]
pub fn binomial_is_odd(n: u64, k: u64) -> bool {
    n & k == k
}

/// Colex index of the edge `{i, j}` on `n` labeled vertices.
#[inline]
pub fn edge_index(i: u32, j: u32, n: u32) -> usize {
    debug_assert!(i < j && j < n, "edge ({i},{j}) out of range for n={n}");
    let _ = n;
    (j as usize * (j as usize - 1)) / 2 + i as usize
}

/// Inverse of [`edge_index`]: the vertex pair of edge slot `e`.
pub fn edge_from_index(e: usize, n: u32) -> (u32, u32) {
    debug_assert!(e < n as usize * (n as usize - 1) / 2);
    let mut j = 1u32;
    while (j as usize + 1) * j as usize / 2 <= e {
        j += 1;
    }
    let i = e - (j as usize) * (j as usize - 1) / 2;
    (i as u32, j)
}

/// Colex rank of a strictly increasing k-subset of `{0, ..., n-1}`.
pub fn ksubset_rank(subset: &[u32]) -> u64 {
    let mut rank = 0u64;
    for (t, &s) in subset.iter().enumerate() {
        debug_assert!(t == 0 || subset[t - 1] < s, "subset must be increasing");
        rank += binomial(s as u64, t as u64 + 1) as u64;
    }
    rank
}

/// The k-subset of `{0, ..., n-1}` with colex rank `rank`.
pub fn ksubset_unrank(rank: u64, n: u32, k: u32) -> Vec<u32> {
    debug_assert!(k <= n);
    debug_assert!((rank as u128) < binomial(n as u64, k as u64));
    let mut out = vec![0u32; k as usize];
    let mut r = rank as u128;
    let mut hi = n as u64;
    for t in (1..=k as u64).rev() {
        // Largest s with C(s, t) <= r; scan down from the previous element.
        let mut s = hi - 1;
        while binomial(s, t) > r {
            s -= 1;
        }
        r -= binomial(s, t);
        out[t as usize - 1] = s as u32;
        hi = s;
    }
    debug_assert_eq!(r, 0);
    out
}

/// Iterator over all k-subsets of `{0, ..., n-1}` in colex order.
///
/// Yields subsets as sorted vectors; the position in the iteration equals
/// the subset's colex rank.
pub struct ColexSubsets {
    n: u32,
    current: Option<Vec<u32>>,
}

impl ColexSubsets {
    pub fn new(n: u32, k: u32) -> Self {
        let current = if k <= n {
            Some((0..k).collect())
        } else {
            None
        };
        ColexSubsets { n, current }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let cur = self.current.as_mut()?;
        let out = cur.clone();
        // Colex successor: bump the lowest element that has room before the
        // next one, resetting everything below it to 0, 1, ...
        let k = cur.len();
        if k == 0 {
            self.current = None;
            return Some(out);
        }
        let mut t = 0;
        loop {
            let limit = if t + 1 < k { cur[t + 1] } else { self.n };
            if cur[t] + 1 < limit {
                cur[t] += 1;
                for (below, slot) in cur.iter_mut().enumerate().take(t) {
                    *slot = below as u32;
                }
                break;
            }
            t += 1;
            if t == k {
                self.current = None;
                break;
            }
        }
        Some(out)
    }
}
