//! Exact spectra and cospectral constructions for "faux trees": non-trees
//! sharing a characteristic polynomial with some tree.
//!
//! The crate covers four matrices of a simple graph (adjacency `A`, Laplacian
//! `L = D - A`, signless Laplacian `Q = D + A`, and normalized adjacency
//! `D^{-1/2} A D^{-1/2}`), exhaustive enumeration of trees and small graphs
//! for censuses, and explicit families of cospectral tree / non-tree pairs,
//! including ornamented binary trees with their transfer-matrix evaluator.
//!
//! ```
//! use fauxtree::graph::named::{cycle, spider};
//! use fauxtree::graph::Graph;
//! use fauxtree::spectra::{cospectral, MatrixKind};
//!
//! let tree = spider(&[2, 2, 2]);
//! let faux = cycle(6).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
//! assert!(cospectral(&tree, &faux, MatrixKind::Adjacency).unwrap());
//! ```

pub mod algebra;
pub mod constructions;
pub mod cycle_decomp;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod spectra;
pub mod word;

pub use error::{Error, Result};
pub use graph::{Graph, RootedGraph};

pub use spectra::MatrixKind;
