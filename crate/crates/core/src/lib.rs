//! Exact structure theory for rings presented as finite-dimensional
//! associative algebras over labelled base fields, for finite rings given by
//! tables, and for mixed rings combining both.
//!
//! All arithmetic is exact. The algebraic routines are generic over a
//! [`Scalar`] field; [`Rat`] (arbitrary-precision rationals) is the carrier
//! used by the file formats and the command-line tool.

pub mod algebra;
pub mod document;
pub mod families;
pub mod finite;
pub mod generate;
pub mod idempotent;
pub mod linalg;
pub mod poly;
pub mod radical;
pub mod report;
mod scalar;

pub use scalar::Scalar;

use num_rational::BigRational;

/// Arbitrary-precision rational, the default scalar.
pub type Rat = BigRational;
pub type RatMatrix = linalg::Matrix<Rat>;
pub type RatSubspace = linalg::Subspace<Rat>;
pub type RatAlgebra = algebra::Algebra<Rat>;
pub type RatElement = algebra::Element<Rat>;
