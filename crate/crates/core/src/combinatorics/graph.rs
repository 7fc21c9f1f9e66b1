//! Labeled simple graphs as edge bitsets in colex order.

use rand::Rng;

use super::{binomial, edge_from_index, edge_index, MAX_VERTICES};
use crate::bits::Bitset;

/// A simple graph on `n` labeled vertices, `n <= 32`, stored as a bitset
/// over the `C(n,2)` colex edge slots.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u32,
    edges: Bitset,
}

impl Graph {
    fn assert_n(n: u32) {
        assert!(
            (1..=MAX_VERTICES).contains(&n),
            "vertex count {n} outside 1..=32"
        );
    }

    pub fn num_edge_slots(n: u32) -> usize {
        n as usize * (n as usize - 1) / 2
    }

    pub fn empty(n: u32) -> Self {
        Self::assert_n(n);
        Graph {
            n,
            edges: Bitset::new(Self::num_edge_slots(n)),
        }
    }

    pub fn complete(n: u32) -> Self {
        let mut g = Graph::empty(n);
        g.edges.flip_all();
        g
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: u32) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.set_edge(v, (v + 1) % n, true);
        }
        g
    }

    pub fn from_edges(n: u32, edges: &[(u32, u32)]) -> Self {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            g.set_edge(a, b, true);
        }
        g
    }

    /// Builds from a packed edge code; requires `C(n,2) <= 64`.
    pub fn from_code(n: u32, code: u64) -> Self {
        Self::assert_n(n);
        let slots = Self::num_edge_slots(n);
        Graph {
            n,
            edges: Bitset::from_word(slots, code),
        }
    }

    /// Uniform random graph (each edge present with probability 1/2).
    pub fn random<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Self {
        let mut g = Graph::empty(n);
        for e in 0..g.edges.len() {
            if rng.gen::<bool>() {
                g.edges.set(e, true);
            }
        }
        g
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edge_bits(&self) -> &Bitset {
        &self.edges
    }

    /// Packed edge code, when the graph fits in one word.
    pub fn code(&self) -> Option<u64> {
        if self.edges.len() <= 64 {
            Some(self.edges.as_word())
        } else {
            None
        }
    }

    #[inline]
    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.edges.get(edge_index(i, j, self.n))
    }

    pub fn set_edge(&mut self, a: u32, b: u32, present: bool) {
        assert!(a != b, "no loops");
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.edges.set(edge_index(i, j, self.n), present);
    }

    pub fn toggle_slot(&mut self, e: usize) {
        self.edges.toggle(e);
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones()
    }

    pub fn complement(&self) -> Self {
        let mut g = self.clone();
        g.edges.flip_all();
        g
    }

    pub fn edge_list(&self) -> Vec<(u32, u32)> {
        self.edges
            .iter_ones()
            .map(|e| edge_from_index(e, self.n))
            .collect()
    }

    /// Number of vertices with degree at least one.
    pub fn effective_vertices(&self) -> u32 {
        let mut touched = 0u32;
        for e in self.edges.iter_ones() {
            let (i, j) = edge_from_index(e, self.n);
            touched |= 1 << i;
            touched |= 1 << j;
        }
        touched.count_ones()
    }

    /// True if the graph has neither a k-clique nor a k-independent set.
    pub fn is_ramsey(&self, k: u32) -> bool {
        super::is_k_ramsey(self, k)
    }

    /// Total number of labeled graphs on `n` vertices, as a bit count.
    pub fn log2_graph_count(n: u32) -> u32 {
        Self::num_edge_slots(n) as u32
    }

    /// Number of k-subsets of the vertex set.
    pub fn num_ksubsets(n: u32, k: u32) -> u64 {
        binomial(n as u64, k as u64) as u64
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn basic_construction() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 0)]);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.code(), Some(0b100001));
        assert_eq!(Graph::from_code(4, 0b100001), g);
    }

    #[test]
    fn complement_is_involutive() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = Graph::random(9, &mut rng);
            assert_eq!(g.complement().complement(), g);
            assert_eq!(
                g.edge_count() + g.complement().edge_count(),
                Graph::num_edge_slots(9)
            );
        }
    }

    #[test]
    fn cycle_and_effective_vertices() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.effective_vertices(), 5);
        let m = Graph::from_edges(6, &[(0, 1)]);
        assert_eq!(m.effective_vertices(), 2);
        assert_eq!(Graph::empty(6).effective_vertices(), 0);
    }
}
