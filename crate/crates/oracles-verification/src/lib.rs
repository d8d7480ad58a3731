//! Oracles independent of growth diagrams, evacuation of tabloids, cell
//! predicates and the enumeration suites that compare all of them.

pub mod asymptotic;
pub mod cells;
pub mod suite;

use affine_permutation::AffineError;
use combinatorics_core::CoreError;
use dars::DarsError;
use thiserror::Error;

pub use asymptotic::{
    affine_evacuation_of, affine_evacuation_with_cap, ptabloid_oracle, ptabloid_oracle_from, AsymptoticTabloid,
    DEFAULT_BLOCK_CAP,
};
pub use cells::{evacuate_tabloid, evacuate_tabloid_with_bound, same_left_cell, same_right_cell, witness_for};
pub use suite::{
    duality_suite, index_identity, run_suites, tuple_round_trip, CheckRecord, Enumeration, Suite, SuiteCount,
    SuiteReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("row assignments did not stabilize within {insertions} insertions")]
    NoStabilization { insertions: usize },
    #[error("no permutation with P-tabloid {tabloid} found with |lambda| <= {bound}")]
    NoWitness { tabloid: String, bound: usize },
    #[error("cell predicates need index 0, got {0}")]
    NonzeroIndex(i64),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Dars(#[from] DarsError),
    #[error(transparent)]
    Affine(#[from] AffineError),
    #[error(transparent)]
    Core(#[from] CoreError),
}
