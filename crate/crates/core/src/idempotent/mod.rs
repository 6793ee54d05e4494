//! Idempotents and the structure theory built on them: idempotent search,
//! minimal one-sided ideals, Brauer's lemma, Pierce corners, semisimple and
//! reduced decompositions, the classification report and unitizations.

mod classify;
mod search;
mod semisimple;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::radical::RadicalError;

pub use classify::{
    classify, definable_unitization, dorroh_unitization, label_parts, ClassificationReport,
    FactorReport, LabelPart, Unitization,
};
pub use search::{
    brauer_idempotent, find_idempotent, find_idempotent_by_descent, find_idempotent_via_radical,
    minimal_one_sided_ideal, pierce_decomposition, principal_ideal, BrauerOutcome, Pierce,
};
pub use semisimple::{
    corner, corner_division_check, frobenius_type, prime_check, reduced_decompose,
    semiprime_check, semisimple_decompose, CornerKind, DivisionType, IdempotentFlags,
    IdempotentSet, ReducedCounts, Reducedness, SemisimpleDecomposition, SimpleFactorReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    /// Ideals `A·a`.
    Left,
    /// Ideals `a·A`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdempotentError {
    #[error("the one-sided annihilator of the algebra is nonzero")]
    AnnihilatorNonzero,
    #[error("ideal is not minimal")]
    NotMinimal,
    #[error("ideal is not one-sided")]
    NotOneSided,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("algebra is not semiprime")]
    NotSemiprime,
    #[error("algebra is zero")]
    ZeroAlgebra,
    #[error("algebra has no unity")]
    NotUnital,
    #[error("could not determine {0}")]
    Undetermined(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Radical(#[from] RadicalError),
}
