//! Exhaustive generation of trees and small graphs, and the faux-tree census.

mod augment;
mod census;
mod structured;
mod trees;

pub use augment::{all_graphs, par_for_each_graph, GraphFilter};
pub use census::{brute_universe, census, CensusMode, CensusTable, ClassMember, SpectralClass, MAX_BRUTE_N};
pub use structured::{odd_unicyclic, q_candidates, q_shapes};
pub use trees::{free_trees, FreeTrees};
