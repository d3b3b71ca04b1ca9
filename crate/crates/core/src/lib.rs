//! Shortest-path matrices for the loop-swapped Floyd-Warshall variant.
//!
//! Running Floyd-Warshall with the pivot loop innermost (`for i, for j, for k`)
//! instead of outermost no longer computes all-pairs shortest paths. It computes
//! a different, well-defined matrix: the cell `(i, j)` holds the minimum weight
//! over the simple paths that the relaxation order can actually assemble. This
//! crate computes that matrix three independent ways and exposes the path-level
//! theory needed to cross-check all of them:
//!
//! - [`relax::incorrect_apsp_ijk`]: direct simulation of the swapped loop.
//! - [`sparse::incorrect_apsp_sparse`]: one SSSP run per source on a restricted
//!   edge set, plus an ascending sweep. Near-linear per source on sparse graphs.
//! - [`minplus::incorrect_apsp_minplus`]: a reduction to O(log n) min-plus
//!   products and calls to a correct-APSP oracle.
//!
//! [`path`] holds the structural predicates (increasing, valley, proper) and a
//! closed-form realization test, together with brute-force evaluators used as
//! oracles in the test suites. All solvers agree cell-exactly on every
//! negative-cycle-free input; the test suites enforce this differentially.
//!
//! Weights are integers with an explicit infinity; vertex ids are 0-based in
//! the API and 1-based in the text formats.

pub mod error;
pub mod generate;
pub mod graph;
pub mod minplus;
pub mod path;
pub mod relax;
pub mod sparse;
pub mod weight;

pub use error::Error;
pub use graph::{DistMatrix, Edge, Graph, InputFormat};
pub use weight::{Weight, W_MAX};
