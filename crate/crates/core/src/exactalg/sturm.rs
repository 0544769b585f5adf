use std::cmp::Ordering;

use num_traits::Zero;
use serde::Serialize;

use super::{Polynomial, Rational};
use crate::{Error, Result};

/// Open interval for root counting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Interval {
    /// (-∞, ∞)
    Real,
    /// (0, ∞)
    Positive,
    /// (-∞, 0)
    Negative,
    /// (a, b) with a < b
    Open(Rational, Rational),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCounts {
    pub distinct: usize,
    pub with_multiplicity: usize,
}

#[derive(Debug, Clone)]
enum Point {
    NegInf,
    PosInf,
    At(Rational),
}

fn sign_at(p: &Polynomial, at: &Point) -> Ordering {
    let s = match at {
        Point::At(x) => p.eval(x),
        Point::PosInf => p.leading().cloned().unwrap_or_else(Rational::zero),
        Point::NegInf => {
            let l = p.leading().cloned().unwrap_or_else(Rational::zero);
            if p.degree().unwrap_or(0) % 2 == 1 { -l } else { l }
        }
    };
    s.cmp(&Rational::zero())
}

fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_zero() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        chain.push(-&r);
    }
    chain.pop();
    chain
}

fn variations(chain: &[Polynomial], at: &Point) -> usize {
    let signs: Vec<Ordering> = chain
        .iter()
        .map(|q| sign_at(q, at))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct real roots of a square-free polynomial in the open interval.
fn count_distinct(p: &Polynomial, lo: &Point, hi: &Point) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let chain = sturm_chain(p);
    // V(lo) - V(hi) counts roots in (lo, hi]; drop a root sitting at hi.
    let half_open = variations(&chain, lo) - variations(&chain, hi);
    let at_hi = matches!(hi, Point::At(x) if p.eval(x).is_zero());
    half_open - usize::from(at_hi)
}

/// Yun's square-free decomposition: `p = c * ∏ factors[i]^(i+1)` with the
/// factors monic, pairwise coprime and square-free.
pub fn square_free_decomposition(p: &Polynomial) -> Result<Vec<Polynomial>> {
    if p.is_zero() {
        return Err(Error::Domain("square-free decomposition of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    let f = p.monic();
    let df = f.derivative();
    let mut a = f.gcd(&df);
    let mut b = f.exact_div(&a)?;
    let mut c = df.exact_div(&a)?;
    let mut d = &c - &b.derivative();
    while b.degree().unwrap_or(0) > 0 {
        a = b.gcd(&d);
        out.push(a.clone());
        b = b.exact_div(&a)?;
        c = d.exact_div(&a)?;
        d = &c - &b.derivative();
    }
    Ok(out)
}

/// Sturm-sequence real-root counts of `p` in an open interval: distinct
/// roots, and roots counted with multiplicity.
pub fn sturm_root_counts(p: &Polynomial, interval: &Interval) -> Result<RootCounts> {
    if p.is_zero() {
        return Err(Error::Domain("root count of the zero polynomial".into()));
    }
    let zero = Rational::zero();
    let (lo, hi) = match interval {
        Interval::Real => (Point::NegInf, Point::PosInf),
        Interval::Positive => (Point::At(zero), Point::PosInf),
        Interval::Negative => (Point::NegInf, Point::At(zero)),
        Interval::Open(a, b) => {
            if a >= b {
                return Err(Error::Domain(format!("empty interval ({a}, {b})")));
            }
            (Point::At(a.clone()), Point::At(b.clone()))
        }
    };
    let square_free = p.exact_div(&p.gcd(&p.derivative()))?;
    let distinct = count_distinct(&square_free, &lo, &hi);
    let with_multiplicity = square_free_decomposition(p)?
        .iter()
        .enumerate()
        .map(|(i, q)| (i + 1) * count_distinct(q, &lo, &hi))
        .sum();
    Ok(RootCounts { distinct, with_multiplicity })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, ratio};

    fn counts(p: &Polynomial, i: Interval) -> (usize, usize) {
        let c = sturm_root_counts(p, &i).unwrap();
        (c.distinct, c.with_multiplicity)
    }

    #[test]
    fn spec_examples() {
        assert_eq!(counts(&Polynomial::from_ints(&[1, -3, 1]), Interval::Positive), (2, 2));
        assert_eq!(counts(&Polynomial::from_ints(&[1, 1, 1]), Interval::Real), (0, 0));
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        assert_eq!(counts(&Polynomial::from_ints(&[2, -3, 0, 1]), Interval::Real), (2, 3));
    }

    #[test]
    fn interval_endpoints_are_excluded() {
        // (t-1)(t-2)(t-3)
        let p = Polynomial::from_ints(&[-6, 11, -6, 1]);
        assert_eq!(counts(&p, Interval::Open(int(1), int(3))), (1, 1));
        assert_eq!(counts(&p, Interval::Open(int(0), int(3))), (2, 2));
        assert_eq!(counts(&p, Interval::Open(int(1), ratio(7, 2))), (2, 2));
        assert_eq!(counts(&p, Interval::Negative), (0, 0));
        // t^2 (t - 1): zero is not in (0, ∞)
        assert_eq!(counts(&Polynomial::from_ints(&[0, 0, -1, 1]), Interval::Positive), (1, 1));
    }

    #[test]
    fn yun_decomposition() {
        let l1 = Polynomial::from_ints(&[-1, 1]);
        let l2 = Polynomial::from_ints(&[2, 1]);
        let p = &(&l1.pow(3) * &l2).scale(&int(5)) * &Polynomial::from_ints(&[1, 0, 1]);
        let f = square_free_decomposition(&p).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f[0], &l2 * &Polynomial::from_ints(&[1, 0, 1]));
        assert_eq!(f[1], Polynomial::one());
        assert_eq!(f[2], l1);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(sturm_root_counts(&Polynomial::zero(), &Interval::Real).is_err());
        assert!(sturm_root_counts(&Polynomial::from_ints(&[1]), &Interval::Open(int(2), int(1))).is_err());
    }
}
