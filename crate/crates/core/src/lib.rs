//! Reciprocal-sum moments of distinct-part partitions: exact series,
//! modular multipliers, special functions and asymptotic expansions.

pub mod asymp;
pub mod error;
pub mod modarith;
pub mod precision;
pub mod qseries;
pub mod render;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use precision::PrecisionContext;
pub use qseries::{MomentValue, RationalSeries};
