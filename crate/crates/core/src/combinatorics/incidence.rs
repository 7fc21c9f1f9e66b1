//! The edge/k-subset incidence structure `I(n,k)`.
//!
//! Rows are the `C(n,2)` edge slots, columns the `C(n,k)` k-subsets in
//! colex order; entry `(e, S)` is one exactly when both endpoints of `e`
//! lie in `S`.  Each row has `C(n-2, k-2)` ones and each column `C(k,2)`.

use super::{binomial, edge_index, ColexSubsets, Graph, SubsetFamily};
use crate::bits::Bitset;
use crate::error::{Error, Result};

/// Columns are capped so the dense bitset representation stays small.
const MAX_COLUMNS: u128 = 1 << 20;

/// Dense incidence structure between edge slots and k-subsets.
pub struct IncidenceMatrix {
    n: u32,
    k: u32,
    /// Per column: bitset over edge slots contained in that subset.
    col_masks: Vec<Bitset>,
    /// Per edge slot: bitset over columns containing that edge.
    row_masks: Vec<Bitset>,
}

impl IncidenceMatrix {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if !(2..=n).contains(&k) || n > super::MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "incidence structure needs 2 <= k <= n <= 32, got n={n}, k={k}"
            )));
        }
        let cols = binomial(n as u64, k as u64);
        if cols > MAX_COLUMNS {
            return Err(Error::InvalidParameter(format!(
                "incidence structure with {cols} columns exceeds the dense cap"
            )));
        }
        let cols = cols as usize;
        let rows = Graph::num_edge_slots(n);
        let mut col_masks = Vec::with_capacity(cols);
        let mut row_masks = vec![Bitset::new(cols); rows];
        for (rank, subset) in ColexSubsets::new(n, k).enumerate() {
            let mut mask = Bitset::new(rows);
            for b in 1..subset.len() {
                for a in 0..b {
                    let e = edge_index(subset[a], subset[b], n);
                    mask.set(e, true);
                    row_masks[e].set(rank, true);
                }
            }
            col_masks.push(mask);
        }
        Ok(IncidenceMatrix {
            n,
            k,
            col_masks,
            row_masks,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn num_rows(&self) -> usize {
        self.row_masks.len()
    }

    pub fn num_columns(&self) -> usize {
        self.col_masks.len()
    }

    /// Ones per row: `C(n-2, k-2)`.
    pub fn row_weight(&self) -> u64 {
        binomial(self.n as u64 - 2, self.k as u64 - 2) as u64
    }

    /// Ones per column: `C(k, 2)`.
    pub fn col_weight(&self) -> u64 {
        binomial(self.k as u64, 2) as u64
    }

    pub fn col_mask(&self, rank: usize) -> &Bitset {
        &self.col_masks[rank]
    }

    pub fn row_mask(&self, e: usize) -> &Bitset {
        &self.row_masks[e]
    }

    /// Edge slots of column `rank`, in increasing order.
    pub fn col_edges(&self, rank: usize) -> Vec<usize> {
        self.col_masks[rank].iter_ones().collect()
    }

    /// Column masks packed into words, when `C(n,2) <= 64`.
    pub fn col_masks_as_words(&self) -> Option<Vec<u64>> {
        if self.num_rows() <= 64 {
            Some(self.col_masks.iter().map(|m| m.as_word()).collect())
        } else {
            None
        }
    }

    /// Multiplicity of edge slot `e` in the family `U`: the number of
    /// members of `U` containing both endpoints of `e`.
    pub fn multiplicity(&self, e: usize, family: &SubsetFamily) -> usize {
        debug_assert_eq!(family.universe_size(), self.num_columns());
        self.row_masks[e].and_count(family.members())
    }

    /// Incidence number `i(G, H)`: over all members `S` of `H`, the total
    /// count of edges of `G` inside `S`.
    pub fn incidence_number(&self, g: &Graph, h: &SubsetFamily) -> u64 {
        debug_assert_eq!(g.n(), self.n);
        debug_assert_eq!(h.universe_size(), self.num_columns());
        h.iter_ranks()
            .map(|s| self.col_masks[s as usize].and_count(g.edge_bits()) as u64)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_and_column_weights() {
        for (n, k) in [(4u32, 3u32), (7, 3), (6, 4), (5, 2), (5, 5)] {
            let inc = IncidenceMatrix::new(n, k).unwrap();
            assert_eq!(inc.num_rows(), (n * (n - 1) / 2) as usize);
            assert_eq!(inc.num_columns(), binomial(n as u64, k as u64) as usize);
            for e in 0..inc.num_rows() {
                assert_eq!(inc.row_mask(e).count_ones() as u64, inc.row_weight());
            }
            for s in 0..inc.num_columns() {
                assert_eq!(inc.col_mask(s).count_ones() as u64, inc.col_weight());
            }
        }
    }

    #[test]
    fn k2_columns_are_single_edges() {
        let inc = IncidenceMatrix::new(5, 2).unwrap();
        for s in 0..inc.num_columns() {
            assert_eq!(inc.col_edges(s), vec![s]);
        }
    }

    #[test]
    fn multiplicity_matches_direct_count() {
        let inc = IncidenceMatrix::new(6, 3).unwrap();
        let fam = SubsetFamily::from_ranks(6, 3, &[0, 1, 5, 17, 19]);
        for e in 0..inc.num_rows() {
            let direct = fam
                .iter_subsets()
                .filter(|s| {
                    let (i, j) = super::super::edge_from_index(e, 6);
                    s.contains(&i) && s.contains(&j)
                })
                .count();
            assert_eq!(inc.multiplicity(e, &fam), direct);
        }
    }

    #[test]
    fn total_multiplicity_is_family_size_times_column_weight() {
        let inc = IncidenceMatrix::new(7, 3).unwrap();
        let fam = SubsetFamily::from_ranks(7, 3, &[2, 3, 11, 30, 31, 34]);
        let total: usize = (0..inc.num_rows())
            .map(|e| inc.multiplicity(e, &fam))
            .sum();
        assert_eq!(total, fam.len() * inc.col_weight() as usize);
    }

    #[test]
    fn incidence_number_matches_double_loop() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let inc = IncidenceMatrix::new(6, 3).unwrap();
        for _ in 0..200 {
            let g = Graph::random(6, &mut rng);
            let word = rand::Rng::gen_range(&mut rng, 0..1u64 << 20);
            let h = SubsetFamily::from_word(6, 3, word);
            let mut direct = 0u64;
            for s in h.iter_subsets() {
                for b in 1..s.len() {
                    for a in 0..b {
                        if g.has_edge(s[a], s[b]) {
                            direct += 1;
                        }
                    }
                }
            }
            assert_eq!(inc.incidence_number(&g, &h), direct);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(IncidenceMatrix::new(3, 1).is_err());
        assert!(IncidenceMatrix::new(3, 4).is_err());
        assert!(IncidenceMatrix::new(33, 3).is_err());
    }
}
