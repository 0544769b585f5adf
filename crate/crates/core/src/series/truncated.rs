use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::{int, Polynomial, Rational};
use crate::{Error, Result};

/// Power series known through `t^order`.
///
/// Binary operations truncate to the smaller of the two orders, and
/// equality compares coefficients through the common order.
#[derive(Clone)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { order, coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        Self::new(p.coefficients().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend a truncated series");
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// `a(t^k)`, kept at the same order.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let mut out = vec![Rational::zero(); self.order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > self.order {
                break;
            }
            out[i * k] = c.clone();
        }
        Self { order: self.order, coeffs: out }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain("series with zero constant term is not invertible".into()));
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let s: Rational = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(-s * &inv0);
        }
        Ok(Self { order: self.order, coeffs: out })
    }

    /// `exp(a)` for `a(0) = 0`, from `n b_n = Σ k a_k b_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("exp needs a zero constant term".into()));
        }
        let mut b: Vec<Rational> = Vec::with_capacity(self.order + 1);
        b.push(Rational::one());
        for n in 1..=self.order {
            let s: Rational = (1..=n)
                .filter(|&k| !self.coeffs[k].is_zero())
                .map(|k| &self.coeffs[k] * int(k as i64) * &b[n - k])
                .sum();
            b.push(s / int(n as i64));
        }
        Ok(Self { order: self.order, coeffs: b })
    }

    /// `log(a)` for `a(0) = 1`, from `b' = a'/a`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain("log needs constant term 1".into()));
        }
        let mut b = vec![Rational::zero(); self.order + 1];
        for n in 1..=self.order {
            let s: Rational = (1..n)
                .map(|k| &b[k] * int(k as i64) * &self.coeffs[n - k])
                .sum();
            b[n] = &self.coeffs[n] - s / int(n as i64);
        }
        Ok(Self { order: self.order, coeffs: b })
    }

    /// `a^r = exp(r log a)` for rational `r`; needs `a(0) = 1`.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self> {
        self.log()?.scale(r).exp()
    }

    /// Repeated squaring; negative exponents go through [`Self::inverse`].
    pub fn pow_int(&self, e: &BigInt) -> Result<Self> {
        use num_traits::Signed;
        let base = if e.is_negative() { self.inverse()? } else { self.clone() };
        let mut e = e.abs();
        let mut result = Self::one(self.order);
        let mut base = base;
        let two = BigInt::from(2);
        while !e.is_zero() {
            if (&e % &two).is_one() {
                result = &result * &base;
            }
            e /= &two;
            if !e.is_zero() {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// First power where the two series differ, through the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order.min(other.order);
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.coeffs.clone())
    }
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order.min(rhs.order);
        TruncatedSeries::new((0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(), n)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order.min(rhs.order);
        TruncatedSeries::new((0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(), n)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.scale(&-Rational::one())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order.min(rhs.order);
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { order: n, coeffs: out }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.to_polynomial(), self.order + 1)
    }
}
