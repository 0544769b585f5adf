use std::fmt;
use std::ops::{Div, Mul};

use num_traits::Zero;

use super::TruncatedSeries;
use crate::exactalg::{Polynomial, Rational};
use crate::{Error, Result};

/// `numerator / denominator` in lowest terms with `denominator(0) = 1`.
///
/// Canonical form makes equality structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalFunction {
    /// Reduces by the monic gcd, then scales so the denominator's constant
    /// term is 1. Errors if the reduced denominator vanishes at `t = 0`.
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        if numerator.is_zero() {
            return Ok(Self { numerator, denominator: Polynomial::one() });
        }
        let g = numerator.gcd(&denominator);
        let num = numerator.exact_div(&g)?;
        let den = denominator.exact_div(&g)?;
        let c0 = den.coeff(0);
        if c0.is_zero() {
            return Err(Error::Domain(format!(
                "denominator {den} vanishes at t = 0; not expandable"
            )));
        }
        let s = c0.recip();
        Ok(Self { numerator: num.scale(&s), denominator: den.scale(&s) })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self { numerator: p, denominator: Polynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator == Polynomial::one()
    }

    /// Reciprocal; the numerator must not vanish at `t = 0`.
    pub fn recip(&self) -> Result<Self> {
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    /// Integer power; negative exponents need `numerator(0) != 0`.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = u32::try_from(e.unsigned_abs())
            .map_err(|_| Error::Domain(format!("exponent {e} too large")))?;
        Ok(Self {
            numerator: base.numerator.pow(k),
            denominator: base.denominator.pow(k),
        })
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        let d = self.denominator.eval(t);
        if d.is_zero() {
            return Err(Error::Domain(format!("pole at t = {t}")));
        }
        Ok(self.numerator.eval(t) / d)
    }

    /// Taylor expansion at 0 through `t^order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let num = TruncatedSeries::from_polynomial(&self.numerator, order);
        let den = TruncatedSeries::from_polynomial(&self.denominator, order);
        &num * &den.inverse().expect("canonical denominators have constant term 1")
    }

    /// Human-readable form: `num` or `num / den`.
    pub fn pretty(&self) -> String {
        self.to_string()
    }
}

/// Expansion of an arbitrary `numerator / denominator` pair, canonicalizing
/// first. Errors when the denominator vanishes at 0.
pub fn ratfun_expand(r: &RationalFunction, order: usize) -> TruncatedSeries {
    r.expand(order)
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &self.numerator * &rhs.numerator,
            &self.denominator * &rhs.denominator,
        )
        .expect("product of expandable functions is expandable")
    }
}

impl Div for &RationalFunction {
    type Output = Result<RationalFunction>;

    fn div(self, rhs: &RationalFunction) -> Result<RationalFunction> {
        if rhs.numerator.is_zero() {
            return Err(Error::Domain("division by zero rational function".into()));
        }
        RationalFunction::new(
            &self.numerator * &rhs.denominator,
            &self.denominator * &rhs.numerator,
        )
    }
}

impl std::iter::Product for RationalFunction {
    fn product<I: Iterator<Item = RationalFunction>>(iter: I) -> Self {
        iter.fold(RationalFunction::one(), |acc, r| &acc * &r)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_zero() || self.denominator == Polynomial::one() {
            write!(f, "{}", self.numerator)
        } else {
            let wrap = |p: &Polynomial| {
                if p.coefficients().iter().filter(|c| !c.is_zero()).count() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                }
            };
            write!(f, "{} / {}", wrap(&self.numerator), wrap(&self.denominator))
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl RationalFunction {
    /// `(1 - t)^e` for any integer `e`.
    pub fn one_minus_t_pow(e: i64) -> Self {
        RationalFunction::from_polynomial(Polynomial::one_minus_t())
            .pow(e)
            .expect("1 - t does not vanish at 0")
    }

    pub fn is_one(&self) -> bool {
        self.numerator.is_one() && self.denominator.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Polynomial::from_ints(n), Polynomial::from_ints(d)).unwrap()
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(rf(&[1], &[1, -1]).expand(5), TruncatedSeries::from_ints(&[1, 1, 1, 1, 1, 1], 5));
        assert_eq!(rf(&[1, -3, 1], &[1, -2, 1]).expand(3), TruncatedSeries::from_ints(&[1, -1, -2, -3], 3));
        assert_eq!(rf(&[1, -2, 1], &[1, -2, 1]).expand(8), TruncatedSeries::one(8));
    }

    #[test]
    fn canonical_form() {
        let r = rf(&[2, -2], &[4, -8, 4]);
        assert_eq!(r.numerator(), &Polynomial::from_ints(&[1, 0]).scale(&crate::exactalg::ratio(1, 2)));
        assert_eq!(r.denominator(), &Polynomial::from_ints(&[1, -1]));
        assert_eq!(rf(&[0, 1], &[0, 2, 2]), rf(&[1], &[2, 2]));
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[0, 1])).is_err());
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
        assert_eq!(rf(&[0], &[3, 1]), RationalFunction::new(Polynomial::zero(), Polynomial::one()).unwrap());
    }

    #[test]
    fn powers_and_display() {
        assert_eq!(RationalFunction::one_minus_t_pow(-2), rf(&[1], &[1, -2, 1]));
        assert_eq!(RationalFunction::one_minus_t_pow(0), RationalFunction::one());
        assert_eq!(rf(&[1, -3, 1], &[1, -2, 1]).to_string(), "(1 - 3t + t^2) / (1 - 2t + t^2)");
        assert_eq!(rf(&[1, -1], &[1]).to_string(), "1 - t");
        assert!(rf(&[0, 1], &[1]).pow(-1).is_err());
    }
}
