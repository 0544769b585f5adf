//! Graded homology maps, Lefschetz numbers, the Lefschetz zeta function and
//! the section-class Gromov series of a mapping torus.
//!
//! The zeta function is computed two independent ways (alternating
//! characteristic polynomials, and `exp` of the Lefschetz generating
//! series), and the Gromov series a third way, as a Möbius-weighted product
//! over the counts `RT_m`. Agreement of the three is checked by the tests.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactalg::{charpoly_rev, det_exact, Matrix, Polynomial, Rational};
use crate::series::{weight_f, RationalFunction, TruncatedSeries};
use crate::{Error, Result};

/// One integer matrix per homology degree `0..=top_degree`; `None` marks a
/// degree with zero rational homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMap {
    maps: Vec<Option<Matrix>>,
}

impl GradedMap {
    pub fn new(maps: Vec<Option<Matrix>>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::Validation("graded map needs at least degree 0".into()));
        }
        for (k, m) in maps.iter().enumerate() {
            if let Some(m) = m {
                if !m.is_square() {
                    return Err(Error::Validation(format!("degree {k} map is not square")));
                }
                if !m.is_integral() {
                    return Err(Error::Validation(format!("degree {k} map is not integral")));
                }
            }
        }
        if maps[0].as_ref() != Some(&Matrix::identity(1)) {
            return Err(Error::Validation("degree 0 map must be [1] (connected space)".into()));
        }
        Ok(Self { maps })
    }

    /// Surface of genus `g` with `f_{*1} = a`: degrees `[1]`, `a`, `[det a]`.
    /// Genus 0 is not expressible here; use [`GradedMap::new`].
    pub fn surface(a: &Matrix) -> Result<Self> {
        let dim = a
            .require_square()
            .map_err(|_| Error::Validation("surface monodromy must be square".into()))?;
        if dim % 2 != 0 {
            return Err(Error::Validation(format!("surface monodromy has odd dimension {dim}")));
        }
        if !a.is_integral() {
            return Err(Error::Validation("surface monodromy must be integral".into()));
        }
        let det = det_exact(a)?;
        if !det.is_one() {
            return Err(Error::Validation(format!(
                "surface monodromy must preserve orientation (det = 1), got det = {det}"
            )));
        }
        Self::new(vec![Some(Matrix::identity(1)), Some(a.clone()), Some(Matrix::identity(1))])
    }

    pub fn top_degree(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn maps(&self) -> &[Option<Matrix>] {
        &self.maps
    }

    /// The degree-1 matrix when this is a surface map built by
    /// [`GradedMap::surface`] (or looks exactly like one).
    pub fn surface_monodromy(&self) -> Option<&Matrix> {
        let unit = Matrix::identity(1);
        match self.maps.as_slice() {
            [Some(_), Some(a), Some(top)] if *top == unit => Some(a),
            _ => None,
        }
    }
}

/// `L(f^n) = Σ_k (-1)^k tr(f_{*k}^n)`.
pub fn lefschetz(g: &GradedMap, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("Lefschetz number of f^0 requested; n must be >= 1".into()));
    }
    let mut total = Rational::zero();
    for (k, m) in g.maps.iter().enumerate() {
        if let Some(m) = m {
            let tr = m.pow(n)?.trace()?;
            if k % 2 == 0 {
                total += tr;
            } else {
                total -= tr;
            }
        }
    }
    integral(total)
}

/// `[L(f), L(f^2), ..., L(f^count)]`, sharing the matrix powers.
pub fn lefschetz_numbers(g: &GradedMap, count: usize) -> Result<Vec<BigInt>> {
    let mut out = vec![Rational::zero(); count];
    for (k, m) in g.maps.iter().enumerate() {
        let Some(m) = m else { continue };
        let mut power = m.clone();
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                power = &power * m;
            }
            let tr = power.trace()?;
            if k % 2 == 0 {
                *slot += tr;
            } else {
                *slot -= tr;
            }
        }
    }
    out.into_iter().map(integral).collect()
}

fn integral(r: Rational) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::Internal(format!("non-integral Lefschetz number {r}")))
    }
}

/// `∏_{k odd} det(I - t f_{*k}) / ∏_{k even} det(I - t f_{*k})`.
pub fn zeta_det(g: &GradedMap) -> Result<RationalFunction> {
    let mut odd = Polynomial::one();
    let mut even = Polynomial::one();
    for (k, m) in g.maps.iter().enumerate() {
        if let Some(m) = m {
            let p = charpoly_rev(m)?;
            if k % 2 == 1 {
                odd = &odd * &p;
            } else {
                even = &even * &p;
            }
        }
    }
    RationalFunction::new(odd, even)
}

/// `exp(Σ_{n ≤ order} L(f^n) t^n / n)`.
pub fn zeta_trace(g: &GradedMap, order: usize) -> Result<TruncatedSeries> {
    let ls = lefschetz_numbers(g, order)?;
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend(
        ls.into_iter()
            .enumerate()
            .map(|(i, l)| Rational::new(l, BigInt::from(i + 1))),
    );
    TruncatedSeries::new(coeffs, order).exp()
}

/// `RT_m = Σ_{m = kd} d L(f^k)`.
pub fn rt_section(g: &GradedMap, m: u64) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::Domain("RT_m needs m >= 1".into()));
    }
    let ls = lefschetz_numbers(g, m as usize)?;
    Ok(rt_from_lefschetz(&ls, m))
}

fn rt_from_lefschetz(ls: &[BigInt], m: u64) -> BigInt {
    (1..=m)
        .filter(|k| m.is_multiple_of(*k))
        .map(|k| BigInt::from(m / k) * &ls[(k - 1) as usize])
        .sum()
}

/// `Gr^T = ∏_{m ≤ order} F(t^m)^{RT_m / m}` through `t^order`.
pub fn gromov_section(g: &GradedMap, order: usize) -> Result<TruncatedSeries> {
    let ls = lefschetz_numbers(g, order)?;
    let f = weight_f(order);
    let mut product = TruncatedSeries::one(order);
    for m in 1..=order {
        let rt = rt_from_lefschetz(&ls, m as u64);
        if rt.is_zero() {
            continue;
        }
        let exponent = Rational::new(rt, BigInt::from(m));
        product = &product * &f.substitute_power(m).pow_rational(&exponent)?;
    }
    Ok(product)
}

/// Expected dimension `2(n-3)(1-g) - 2κ·A + 2k` of the moduli space of
/// genus-`g` curves with `k` marked points in class `A`, for a symplectic
/// manifold of complex dimension `n`.
pub fn moduli_dimension(n: i64, genus: i64, marked: i64, kappa_dot_a: i64) -> i64 {
    2 * (n - 3) * (1 - genus) - 2 * kappa_dot_a + 2 * marked
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusSolution {
    Genus(u64),
    None,
    /// Every genus contributes (complex dimension 3 with κ·A = 0).
    All,
}

/// Genus of the curves counted in degree zero: `κ·A = (n-3)(1-g)`.
pub fn degree_zero_genus(n: i64, kappa_dot_a: i64) -> GenusSolution {
    let c = n - 3;
    if c == 0 {
        return if kappa_dot_a == 0 { GenusSolution::All } else { GenusSolution::None };
    }
    if kappa_dot_a % c != 0 {
        return GenusSolution::None;
    }
    let g = 1 - kappa_dot_a / c;
    if g < 0 {
        GenusSolution::None
    } else {
        GenusSolution::Genus(g as u64)
    }
}
