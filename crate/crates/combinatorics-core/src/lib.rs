//! Partitions, compositions, tabloids and (skew) standard Young tableaux.
//!
//! Cells use matrix coordinates `(row, column)`, 1-based, rows growing downward.

pub mod error;
pub mod partition;
pub mod statistics;
pub mod tableau;
pub mod tabloid;

pub use error::CoreError;
pub use partition::{dominates, partitions_of, Composition, Partition};
pub use statistics::{d_statistic, delta_statistic, minimal_inner_shape, minimal_inner_shape_pair};
pub use tableau::{evacuation, looparrowright, row_content_tabloid, SkewTableau, StandardTableau};
pub use tabloid::Tabloid;
