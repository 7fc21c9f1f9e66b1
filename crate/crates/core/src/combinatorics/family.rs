//! Families of k-subsets, stored as bitsets over colex ranks.

use super::{binomial, ksubset_unrank};
use crate::bits::Bitset;

/// A set of k-subsets of `{0, ..., n-1}`, indexed by colex rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetFamily {
    n: u32,
    k: u32,
    members: Bitset,
}

impl SubsetFamily {
    pub fn empty(n: u32, k: u32) -> Self {
        assert!(k <= n, "k={k} exceeds n={n}");
        let total = binomial(n as u64, k as u64);
        assert!(total <= (1 << 30), "family universe too large");
        SubsetFamily {
            n,
            k,
            members: Bitset::new(total as usize),
        }
    }

    pub fn full(n: u32, k: u32) -> Self {
        let mut f = Self::empty(n, k);
        f.members.flip_all();
        f
    }

    pub fn from_ranks(n: u32, k: u32, ranks: &[u64]) -> Self {
        let mut f = Self::empty(n, k);
        for &r in ranks {
            f.members.set(r as usize, true);
        }
        f
    }

    /// Builds from a packed member word; requires `C(n,k) <= 64`.
    pub fn from_word(n: u32, k: u32, word: u64) -> Self {
        let total = binomial(n as u64, k as u64) as usize;
        assert!(total <= 64);
        SubsetFamily {
            n,
            k,
            members: Bitset::from_word(total, word),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn universe_size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn contains(&self, rank: u64) -> bool {
        self.members.get(rank as usize)
    }

    pub fn insert(&mut self, rank: u64) {
        self.members.set(rank as usize, true);
    }

    pub fn len(&self) -> usize {
        self.members.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter_ranks(&self) -> impl Iterator<Item = u64> + '_ {
        self.members.iter_ones().map(|r| r as u64)
    }

    /// The member subsets themselves, in colex order.
    pub fn iter_subsets(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        self.iter_ranks()
            .map(move |r| ksubset_unrank(r, self.n, self.k))
    }
}

impl std::fmt::Debug for SubsetFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SubsetFamily(n={}, k={}, ranks={:?})",
            self.n,
            self.k,
            self.iter_ranks().collect::<Vec<_>>()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_roundtrip() {
        let f = SubsetFamily::from_ranks(5, 3, &[0, 7, 9]);
        assert_eq!(f.universe_size(), 10);
        assert_eq!(f.len(), 3);
        assert!(f.contains(7) && !f.contains(3));
        assert_eq!(f.iter_ranks().collect::<Vec<_>>(), vec![0, 7, 9]);
        assert_eq!(f.iter_subsets().next().unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn full_family_has_all_subsets() {
        let f = SubsetFamily::full(6, 3);
        assert_eq!(f.len(), 20);
    }
}
