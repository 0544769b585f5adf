//! Truncated power series and rational functions in one variable `t`.

mod moebius;
mod ratfun;
mod truncated;

pub use moebius::{moebius, weight_f};
pub use ratfun::{ratfun_expand, RationalFunction};
pub use truncated::TruncatedSeries;

/// Series order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 16;
