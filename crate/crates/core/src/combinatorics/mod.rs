//! Labeled graphs on at most 32 vertices, k-subset bookkeeping in
//! colexicographic order, the edge/subset incidence structure, and the
//! brute-force Ramsey census used as ground truth by every formula module.

mod binomial;
mod family;
mod graph;
mod incidence;
mod ramsey;

pub use binomial::{
    binomial, binomial_big, binomial_is_odd, edge_from_index, edge_index, ksubset_rank,
    ksubset_unrank, ColexSubsets,
};
pub use family::SubsetFamily;
pub use graph::Graph;
pub use incidence::IncidenceMatrix;
pub use ramsey::{
    count_ramsey_graphs, divisibility_check, is_k_ramsey, DivisibilityReport, RamseyTester,
};
pub(crate) use ramsey::subset_edge_masks;

/// Maximum number of vertices supported by the graph representation.
pub const MAX_VERTICES: u32 = 32;
