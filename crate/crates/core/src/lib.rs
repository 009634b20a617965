//! Finite groups, quandles and symmetric quandles: exhaustive enumeration of
//! good involutions, classification up to isomorphism, and cross-checks of
//! the closed-form description on generalized Alexander quandles.

pub mod catalog;
pub mod group;
pub mod io;
pub mod perm;
pub mod quandle;
pub mod report;
pub mod search;
pub mod spec;
pub mod symq;
pub mod torus;

pub use group::{FiniteGroup, GroupAutomorphism, GroupError};
pub use quandle::{FiniteQuandle, QuandleError};
pub use search::{Budget, BudgetExceeded, DEFAULT_BUDGET};
pub use symq::{Limits, SymqError};
