//! Classical Robinson-Schensted in four realizations: row insertion, Fomin's
//! vertex rules, Viennot's shadow lines and the dual edge rules.

pub mod dual;
pub mod growth;
pub mod insertion;
pub mod perm;
pub mod shadow;

use combinatorics_core::evacuation;
use thiserror::Error;

pub use dual::{dual_edge_labels, dual_rs, dual_rule, reverse_dual_rule, TileKind};
pub use growth::{growth_diagram, rs_growth, ClassicalGrowthDiagram, EdgeLabels};
pub use insertion::{row_insert, rs_insertion};
pub use perm::FinitePermutation;
pub use shadow::{rs_shadow, shadow_edge_labels, shadow_passes, ShadowLine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassicalError {
    #[error("not a permutation of 1..n: {0:?}")]
    NotPermutation(Vec<usize>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("n = {n} exceeds the exhaustive bound {max}")]
    BoundExceeded { n: usize, max: usize },
}

/// Largest n accepted by [`classical_cell_invariants`].
pub const EXHAUSTIVE_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalReport {
    pub n: usize,
    pub checked: usize,
    /// Permutations on which some realization disagreed with insertion.
    pub mismatches: Vec<FinitePermutation>,
}

impl ClassicalReport {
    pub fn all_agree(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// True iff growth, shadow lines and dual growth (after evacuating Q') all
/// reproduce the insertion tableaux of `w`.
pub fn realizations_agree(w: &FinitePermutation) -> bool {
    let expect = rs_insertion(w);
    let (p, q) = dual_rs(w);
    rs_growth(w) == expect && rs_shadow(w) == expect && p == expect.0 && evacuation(&q) == expect.1
}

/// Compares all realizations over every permutation of 1..=n.
pub fn classical_cell_invariants(n: usize) -> Result<ClassicalReport, ClassicalError> {
    if n > EXHAUSTIVE_MAX_N {
        return Err(ClassicalError::BoundExceeded { n, max: EXHAUSTIVE_MAX_N });
    }
    let all = FinitePermutation::all(n);
    let mismatches = all.iter().filter(|w| !realizations_agree(w)).cloned().collect();
    Ok(ClassicalReport { n, checked: all.len(), mismatches })
}
