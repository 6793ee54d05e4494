//! Algebras presented by structure constants, and the general toolkit on
//! them: annihilators, centers, centralizers, generated subrings, power
//! spans, unity search and the unit / zero-divisor dichotomy.

mod ops;
mod presentation;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{LinalgError, Subspace};
use crate::scalar::Scalar;

pub use ops::{
    annihilators, center, centralizer, classify_element, find_unity, generated_subring,
    label_generated_subring, power_span, Annihilators, ElementKind, ZeroDivisorSide,
};
pub(crate) use ops::next_power;
pub use presentation::{Algebra, Quotient, Subalgebra, DEFAULT_LABEL};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("label {label} does not occupy a contiguous block of coordinates")]
    NonContiguousLabel { label: String },
    #[error("e{}·e{} has a component outside the label of its factors", .i + 1, .j + 1)]
    CrossLabelProduct { i: usize, j: usize },
    #[error("associativity fails at (e{}·e{})·e{}", .i + 1, .j + 1, .k + 1)]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("element of length {found} used with an algebra of dimension {dim}")]
    MismatchedAlgebras { dim: usize, found: usize },
    #[error("subspace is not closed under multiplication")]
    NotClosed,
    #[error("subspace is not a two-sided ideal")]
    NotTwoSided,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// An algebra element as its coordinate vector in the basis.
#[derive(Clone, PartialEq)]
pub struct Element<F> {
    coords: Vec<F>,
}

impl<F: Scalar> Element<F> {
    pub fn new(coords: Vec<F>) -> Self {
        Element { coords }
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &F) -> Self {
        Element::new(self.coords.iter().map(|c| c.clone() * s.clone()).collect())
    }
}

impl<F: Scalar> std::ops::Add for &Element<F> {
    type Output = Element<F>;
    fn add(self, rhs: &Element<F>) -> Element<F> {
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() + b.clone()).collect())
    }
}

impl<F: Scalar> std::ops::Sub for &Element<F> {
    type Output = Element<F>;
    fn sub(self, rhs: &Element<F>) -> Element<F> {
        Element::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a.clone() - b.clone()).collect())
    }
}

impl<F: Scalar> From<Vec<F>> for Element<F> {
    fn from(coords: Vec<F>) -> Self {
        Element::new(coords)
    }
}

impl<F: fmt::Debug> fmt::Debug for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sidedness {
    Left,
    Right,
    TwoSided,
    SubringOnly,
}

/// A subspace carrying the closure property it was constructed with.
#[derive(Clone, PartialEq)]
pub struct IdealSpace<F> {
    pub subspace: Subspace<F>,
    pub sidedness: Sidedness,
}

impl<F: fmt::Debug> fmt::Debug for IdealSpace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {:?}", self.sidedness, self.subspace)
    }
}

impl<F: Scalar> IdealSpace<F> {
    pub fn new(subspace: Subspace<F>, sidedness: Sidedness) -> Self {
        IdealSpace { subspace, sidedness }
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.subspace.is_zero()
    }

    /// Re-checks the recorded closure property against `alg`.
    pub fn verify(&self, alg: &Algebra<F>) -> bool {
        alg.has_sidedness(&self.subspace, self.sidedness)
    }
}

#[cfg(test)]
mod tests;
