use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Matrix, Polynomial, Rational};
use crate::Result;

/// Exact determinant.
///
/// Rational input is first made integral by scaling each row by the lcm of
/// its denominators; the integer determinant then comes from fraction-free
/// Bareiss elimination, so no intermediate rationals are formed.
pub fn det_exact(m: &Matrix) -> Result<Rational> {
    let n = m.require_square()?;
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let l = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        rows.push(row.iter().map(|e| (e * &l).to_integer()).collect());
        scale *= l;
    }
    Ok(Rational::new(bareiss(rows), scale))
}

fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Sylvester's identity guarantees exactness.
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `det(I - tM)` via Faddeev–LeVerrier. The constant term is always 1.
pub fn charpoly_rev(m: &Matrix) -> Result<Polynomial> {
    let n = m.require_square()?;
    // c[k] is the coefficient of λ^k in det(λI - M).
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let identity = Matrix::identity(n);
    let mut aux = Matrix::zeros(n, n);
    for k in 1..=n {
        aux = &(m * &aux) + &identity.scale(&c[n - k + 1]);
        let tr = (m * &aux).trace()?;
        c[n - k] = -tr / super::int(k as i64);
    }
    // det(I - tM) = t^n p(1/t): the reversed coefficient list.
    Ok(Polynomial::new(c.into_iter().rev().collect()))
}

/// `tr(M^n)`; `n = 0` gives the dimension.
pub fn power_trace(m: &Matrix, n: u64) -> Result<Rational> {
    m.require_square()?;
    m.pow(n)?.trace()
}
