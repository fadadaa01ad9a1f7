//! Chi-bounded coloring through graph decompositions of bounded rank.
//!
//! Graphs are simple and undirected on vertices `0..n`. A [`Decomposition`] is a
//! tree with a map from vertices to tree nodes; its rank is the largest GF(2)
//! cut rank over tree edges. Given piece colorings within a budget, the colorers
//! in [`chi`] produce proper colorings whose size depends only on the clique
//! number, the budget, and the rank.

pub mod bitset;
pub mod chi;
pub mod cut;
pub mod decomposition;
pub mod error;
pub mod gen;
pub mod graph;
mod io;
pub mod oracles;
pub mod par;
pub mod rankwidth;

pub use bitset::VertexSet;
pub use cut::{cut_diversity, cut_matrix, cut_rank, CutMatrix};
pub use decomposition::{
    decomposition_diversity, decomposition_rank, edge_cut, piece_graph, restrict,
    star_decomposition, validate_rank_decomposition, Decomposition, RankDecomposition,
};
pub use error::{Error, RankDecompositionError, Result};
pub use graph::{named_graph, Graph, NamedGraph};
pub use rankwidth::{exact_rank_width, exact_rank_width_with, RankWidthConfig};
