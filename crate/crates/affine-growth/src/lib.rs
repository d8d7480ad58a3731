//! Finite slices of the affine growth diagram of an affine permutation:
//! dual edge labels, tile kinds, vertex partitions, line colors and windows.

pub mod invariants;
pub mod region;
pub mod window;

use thiserror::Error;

pub use invariants::{check_invariants, insertion_shape, InvariantReport};
pub use region::{EdgeCoordinate, GrowthRegion, Orientation, ShadowTrace, MAX_TILES};
pub use window::{first_stable_window, first_stable_window_with_cap, StableWindow, WindowSummary, DEFAULT_WINDOW_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error("region of {rows} x {cols} tiles exceeds the resource limit")]
    RegionTooLarge { rows: usize, cols: usize },
    #[error("outside the computed region: {0}")]
    OutOfRegion(String),
    #[error("edge {0:?} has label 0 and no color")]
    Uncolored(EdgeCoordinate),
    #[error("line through {0:?} leaves the region before it is colored")]
    TraceLeftRegion(EdgeCoordinate),
    #[error("inconsistent diagram: {0}")]
    Inconsistent(String),
    #[error("no stable window within {windows} windows; mu chain from window {first}: {chain}")]
    NoStableWindow { windows: i64, first: i64, chain: String },
}
