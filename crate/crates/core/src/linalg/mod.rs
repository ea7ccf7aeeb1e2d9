//! Exact linear algebra over GF(q): row reduction, canonical subspaces and
//! the subspace lattice operations used by the code and graph modules.

mod echelon;
mod enumerate;
mod matrix;
mod subspace;
mod text;

use thiserror::Error;

use crate::gf::GfError;

pub use echelon::{rref, rref_generic, rref_packed, BitRows, Rref};
pub use enumerate::{for_each_subspace, monic_vectors, odometer, subspaces};
pub use matrix::Matrix;
pub use subspace::Subspace;
pub use text::{parse_matrices, parse_matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("packed elimination needs GF(2)")]
    NotBinary,
    #[error("subspace is not contained in the outer space")]
    NotContained,
    #[error("dimension {d} outside [{lo}, {hi}]")]
    DimensionOutOfRange { d: usize, lo: usize, hi: usize },
    #[error("operation needs a nonzero subspace")]
    ZeroSubspace,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
