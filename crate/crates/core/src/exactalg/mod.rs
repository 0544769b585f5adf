//! Exact integer and rational linear algebra.
//!
//! Everything here works over [`BigRational`] / [`BigInt`]; there is no
//! floating point anywhere in the crate.

mod det;
mod matrix;
mod poly;
mod smith;
mod sturm;
mod symplectic;

pub use det::{charpoly_rev, det_exact, power_trace};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use smith::{cokernel_decomposition, smith_normal_form, Cokernel, SmithDecomposition};
pub use sturm::{square_free_decomposition, sturm_root_counts, Interval, RootCounts};
pub use symplectic::{standard_j, symplectic_check, symplectic_check_with, JConvention};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` into an exact rational.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    let s = s.trim();
    let bad = || crate::Error::Parse(format!("not a rational: `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&d) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}
