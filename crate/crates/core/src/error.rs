use thiserror::Error;

use crate::polygon::Diagonal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid polygon context n={n} k={k}: need n > 2k and k >= 1")]
    InvalidContext { n: usize, k: usize },

    #[error("diagonal {0} is not a cell of the staircase for n={1} k={2}")]
    NotACell(Diagonal, usize, usize),

    #[error("diagonal set contains a {0}-crossing")]
    HasCrossing(usize),

    #[error("not a k-triangulation: {0}")]
    NotTriangulation(String),

    #[error("operation requires k={expected}, got k={got}")]
    UnsupportedK { expected: usize, got: usize },

    #[error("the root has no parent")]
    Root,

    #[error("invalid Dyck path: {0}")]
    InvalidPath(String),

    #[error("paths have different semilengths ({0} vs {1})")]
    SemilengthMismatch(usize, usize),

    #[error("first path goes below the second")]
    NotDominating,

    #[error("invalid pair encoding: {0}")]
    InvalidEncoding(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{what} of size {size} exceeds the guard limit {limit} (override with KTRI_GUARD)")]
    GuardExceeded {
        what: &'static str,
        size: u64,
        limit: u64,
    },

    #[error("structural invariant violated: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;
