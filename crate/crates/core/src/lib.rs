//! Exact combinatorics of k-triangulations of convex polygons.
//!
//! * [`polygon`]: diagonals, staircase diagrams, crossing tests and a
//!   brute-force enumerator.
//! * [`dyck`]: Dyck paths, non-crossing tuples, pair encodings and the
//!   Catalan determinant count.
//! * [`gentree2`]: the isomorphic generating trees for 2-triangulations and
//!   for pairs of non-crossing Dyck paths.
//! * [`bijection`]: the coloring map from 2-triangulations to path pairs and
//!   its inverse through the trees.
//! * [`gentree_k`]: the generating tree for k-triangulations, any `k >= 2`.
//! * [`format`]: the line-oriented text formats.
//! * [`verify`]: exhaustive invariant checks over small polygons.

pub mod bijection;
pub mod dyck;
pub mod error;
pub mod format;
pub mod gentree2;
pub mod gentree_k;
pub mod guard;
pub mod polygon;
pub mod verify;

pub use error::{Error, Result};
pub use guard::Guard;
pub use polygon::{Diagonal, DiagonalSet, KTriangulation, PolygonContext};
