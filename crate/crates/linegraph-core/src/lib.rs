//! Reconstruction of root graphs from line graphs.
//!
//! The input is a symmetric 0/1 matrix read as a link adjacency matrix
//! (equivalently, the adjacency matrix of a line graph). [`reconstruct`]
//! relabels it so the first link's neighborhoods become recognizable,
//! initializes an endnode table, completes the table in one sweep, and
//! verifies the result by recomputing link adjacency. Inputs that are not
//! line graphs come back as [`reconstruct::ReconstructError::NotALineGraph`].
//!
//! The [`reference`] module holds independent recognizers (forbidden induced
//! subgraphs, a spectral necessary condition, brute-force root search) and a
//! Krausz-partition baseline used for benchmarking.

pub mod fixtures;
pub mod gen;
pub mod graph;
pub mod io;
pub mod iso;
pub mod matrix;
pub mod reconstruct;
pub mod reference;
pub mod relabel;

pub use gen::generate_er;
pub use graph::{Component, Graph};
pub use iso::{enumerate_connected, isomorphic_small};
pub use matrix::{IncidenceMatrix, SymBitMatrix};
pub use reconstruct::{
    reconstruct, reconstruct_with, EndnodeTable, ReconstructError, ReconstructionReport,
    VerifyMode,
};
pub use relabel::{matrix_relabeling, Lam, Permutation, RelabelResult, Relabeling};
