//! The dual affine Robinson-Schensted map on affine permutations, its inverse,
//! and the conditions characterizing its image.

pub mod map;
pub mod omega;
pub mod tuple;
pub mod validate;

use affine_growth::GrowthError;
use combinatorics_core::CoreError;
use thiserror::Error;

pub use map::{forward, forward_with_cap, inverse, inverse_with_cap};
pub use omega::{build_omega, OmegaDiagram};
pub use tuple::DarsTuple;
pub use validate::{some_column_slides, validate, Condition, ConditionResult, Status, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DarsError {
    #[error(transparent)]
    Growth(#[from] GrowthError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("tuple violates condition {condition}: {detail}")]
    InvalidTuple { condition: &'static str, detail: String },
    #[error("tableaux of different shapes: {0}")]
    ShapeMismatch(String),
    #[error("reconstruction failed: {0}")]
    Reconstruction(String),
    #[error("inconsistent diagram: {0}")]
    Inconsistent(String),
    #[error("bad tuple JSON: {0}")]
    Json(String),
}
