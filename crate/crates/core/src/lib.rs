//! Exact computation of Lefschetz zeta functions, Alexander polynomials of
//! fibered knots and degree-zero Gromov series for mapping tori, elliptic
//! surfaces, knot-surgered manifolds, fiber sums and sphere products.
//!
//! All arithmetic is over arbitrary-precision integers and rationals.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod json;
pub mod knots;
pub mod manifolds;
pub mod series;
pub mod symclass;
pub mod zeta;

pub use error::{Error, Result};
