//! Exact linear algebra over a [`Scalar`](crate::Scalar) field: row
//! reduction, linear solves, kernels and canonical subspaces.

mod matrix;
mod subspace;

pub use matrix::{rref, solve, Matrix};
pub use subspace::{kernel, Subspace};

pub(crate) use matrix::{axpy, is_zero_vec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("complement requires the first subspace to lie inside the second")]
    NotContained,
}
