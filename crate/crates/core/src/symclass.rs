//! Classification of symplectic matrices off the walls `W_m`, power-sign
//! predictions, and periodic-orbit bookkeeping for linear toral maps.
//!
//! Types are read from eigenvalue *pairs* `{λ, 1/λ}`: `P` counts pairs of
//! positive real eigenvalues, `N` pairs of negative ones. Elliptic and
//! complex-quadruple eigenvalues contribute `+1` to every power sign, a
//! positive pair contributes `-1`, and a negative pair `-(-1)^m`. Hence
//! `sgn det(A^m - I) = (-1)^(P + N(m+1))`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactalg::{
    charpoly_rev, det_exact, int, sturm_root_counts, symplectic_check, Interval, Matrix, Rational,
};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// Default bound for wall checks.
pub const DEFAULT_WALL_BOUND: u64 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TypeTag {
    E,
    H,
    Hprime,
    /// `P` and `N` both odd; only possible in dimension 4 and up.
    Mixed,
}

impl TypeTag {
    pub fn from_pairs(positive: usize, negative: usize) -> Self {
        match (positive % 2, negative % 2) {
            (0, 0) => TypeTag::E,
            (1, 0) => TypeTag::H,
            (0, _) => TypeTag::Hprime,
            _ => TypeTag::Mixed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeProfile {
    /// Pairs of positive real eigenvalues, with multiplicity.
    pub positive_pairs: usize,
    /// Pairs of negative real eigenvalues, with multiplicity.
    pub negative_pairs: usize,
    pub tag: TypeTag,
    /// Individual real eigenvalue counts, for transparency.
    pub positive_real_eigenvalues: usize,
    pub negative_real_eigenvalues: usize,
}

impl TypeProfile {
    pub fn new(positive_pairs: usize, negative_pairs: usize) -> Self {
        Self {
            positive_pairs,
            negative_pairs,
            tag: TypeTag::from_pairs(positive_pairs, negative_pairs),
            positive_real_eigenvalues: 2 * positive_pairs,
            negative_real_eigenvalues: 2 * negative_pairs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    #[serde(flatten)]
    pub profile: TypeProfile,
    pub eigenvalue_reading: &'static str,
    pub wall_bound: u64,
    /// Every `m <= wall_bound` with `det(A^m - I) = 0`.
    pub walls: Vec<u64>,
}

fn require_symplectic(a: &Matrix) -> Result<usize> {
    let dim = a.require_square()?;
    if !symplectic_check(a)? {
        return Err(Error::Validation("matrix is not symplectic (AᵗJA ≠ J)".into()));
    }
    Ok(dim)
}

/// Classifies `a` by exact real-root counting on `det(tI - A)`.
pub fn type_profile(a: &Matrix, wall_bound: u64) -> Result<ClassificationReport> {
    let dim = require_symplectic(a)?;
    if det_exact(&a.identity_minus()?)?.is_zero() {
        return Err(Error::Wall { m: 1 });
    }
    let charpoly = charpoly_rev(a)?.reversed(dim);
    let pos = sturm_root_counts(&charpoly, &Interval::Positive)?.with_multiplicity;
    let neg = sturm_root_counts(&charpoly, &Interval::Negative)?.with_multiplicity;
    if pos % 2 != 0 || neg % 2 != 0 {
        return Err(Error::Internal(format!(
            "symplectic spectrum with unpaired real eigenvalues ({pos} positive, {neg} negative)"
        )));
    }
    let mut profile = TypeProfile::new(pos / 2, neg / 2);
    profile.positive_real_eigenvalues = pos;
    profile.negative_real_eigenvalues = neg;
    Ok(ClassificationReport {
        profile,
        eigenvalue_reading: "pairs {λ, 1/λ} of real eigenvalues",
        wall_bound,
        walls: wall_memberships(a, wall_bound)?,
    })
}

pub(crate) fn sign_of(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// `sgn det(A^m - I)`, computed exactly.
pub fn sign_power_exact(a: &Matrix, m: u64) -> Result<i8> {
    if m == 0 {
        return Err(Error::Domain("power must be >= 1".into()));
    }
    let d = det_exact(&a.pow(m)?.identity_minus()?)?;
    // det(A^m - I) = (-1)^dim det(I - A^m), and dim is even here
    let d = if a.rows().is_multiple_of(2) { d } else { -d };
    match sign_of(&d) {
        0 => Err(Error::Wall { m }),
        s => Ok(s),
    }
}

/// `(-1)^(P + N(m+1))`.
pub fn sign_power_predicted(profile: &TypeProfile, m: u64) -> i8 {
    let exponent = profile.positive_pairs as u64 + profile.negative_pairs as u64 * (m + 1);
    if exponent.is_multiple_of(2) { 1 } else { -1 }
}

/// All `m <= bound` with `det(A^m - I) = 0`.
pub fn wall_memberships(a: &Matrix, bound: u64) -> Result<Vec<u64>> {
    a.require_square()?;
    let mut walls = Vec::new();
    let mut power = a.clone();
    for m in 1..=bound {
        if m > 1 {
            power = &power * a;
        }
        if det_exact(&power.identity_minus()?)?.is_zero() {
            walls.push(m);
        }
    }
    Ok(walls)
}

fn require_toral(a: &Matrix) -> Result<()> {
    if a.rows() != 2 || a.cols() != 2 || !a.is_integral() {
        return Err(Error::Domain("toral maps need a 2x2 integer matrix".into()));
    }
    if !det_exact(a)?.is_one() {
        return Err(Error::Domain("toral map must have det A = 1".into()));
    }
    Ok(())
}

/// Number of fixed points of `A^n` acting on `R²/Z²`: `|det(A^n - I)|`.
pub fn toral_fixed_points(a: &Matrix, n: u64) -> Result<BigInt> {
    require_toral(a)?;
    if n == 0 {
        return Err(Error::Domain("period must be >= 1".into()));
    }
    let d = det_exact(&a.pow(n)?.identity_minus()?)?;
    if d.is_zero() {
        return Err(Error::Wall { m: n });
    }
    Ok(d.abs().to_integer())
}

/// Orbit counts of one minimal period.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrbitCounts {
    pub e: BigInt,
    pub h: BigInt,
    pub h_prime: BigInt,
}

/// Finite periodic orbits by minimal period and type.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrbitData {
    periods: BTreeMap<u64, OrbitCounts>,
}

impl OrbitData {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, period: u64, counts: OrbitCounts) -> Result<()> {
        if period == 0 {
            return Err(Error::Validation("orbit period must be >= 1".into()));
        }
        if counts.e.is_negative() || counts.h.is_negative() || counts.h_prime.is_negative() {
            return Err(Error::Validation(format!("negative orbit count at period {period}")));
        }
        let slot = self.periods.entry(period).or_default();
        slot.e += counts.e;
        slot.h += counts.h;
        slot.h_prime += counts.h_prime;
        Ok(())
    }

    pub fn with(mut self, period: u64, e: i64, h: i64, h_prime: i64) -> Result<Self> {
        self.insert(period, OrbitCounts { e: e.into(), h: h.into(), h_prime: h_prime.into() })?;
        Ok(self)
    }

    pub fn get(&self, period: u64) -> OrbitCounts {
        self.periods.get(&period).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &OrbitCounts)> {
        self.periods.iter().map(|(k, v)| (*k, v))
    }
}

/// Möbius-inverted fixed-point counts of a hyperbolic toral map.
///
/// An orbit of minimal period `k` has return map `A^k`, so its type is that
/// of `A^k`: `H` for positive eigenvalues, and for negative eigenvalues `H'`
/// at odd `k` and `H` at even `k`.
pub fn toral_orbit_data(a: &Matrix, max_period: u64) -> Result<OrbitData> {
    require_toral(a)?;
    let tr = a.trace()?;
    if tr.abs() <= int(2) {
        return Err(Error::Domain(format!(
            "toral orbit data needs a hyperbolic matrix (|tr A| > 2), got tr A = {tr}"
        )));
    }
    let negative = tr.is_negative();
    let fixed: Vec<BigInt> = (1..=max_period)
        .map(|n| toral_fixed_points(a, n))
        .collect::<Result<_>>()?;
    let mut data = OrbitData::new();
    for k in 1..=max_period {
        let sum: BigInt = (1..=k)
            .filter(|d| k % d == 0)
            .map(|d| BigInt::from(crate::series::moebius(k / d).expect("k/d >= 1")) * &fixed[(d - 1) as usize])
            .sum();
        let k_big = BigInt::from(k);
        if !(&sum % &k_big).is_zero() {
            return Err(Error::Internal(format!("orbit count at period {k} is not an integer")));
        }
        let count = sum / k_big;
        if count.is_zero() {
            continue;
        }
        let mut counts = OrbitCounts::default();
        if negative && k % 2 == 1 {
            counts.h_prime = count;
        } else {
            counts.h = count;
        }
        data.insert(k, counts)?;
    }
    Ok(data)
}

/// `(1 + s t^k)^a` for any integer `a`, by the binomial series.
fn binomial_series(sign: i64, k: usize, a: &BigInt, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut c = Rational::one();
    let s = int(sign);
    let mut j = 0usize;
    while j * k <= order {
        coeffs[j * k] = c.clone();
        // C(a, j+1) s^(j+1) = C(a, j) s^j * s (a - j) / (j + 1)
        c = c * &s * Rational::from_integer(a - BigInt::from(j)) / int(j as i64 + 1);
        if c.is_zero() {
            break;
        }
        j += 1;
    }
    TruncatedSeries::new(coeffs, order)
}

/// `f_E(t^k) = 1/(1 - t^k)`.
pub fn gen_elliptic(k: usize, order: usize) -> TruncatedSeries {
    binomial_series(-1, k, &BigInt::from(-1), order)
}

/// `f_H(t^k) = 1 - t^k`.
pub fn gen_hyperbolic(k: usize, order: usize) -> TruncatedSeries {
    binomial_series(-1, k, &BigInt::one(), order)
}

/// `f_{H'}(t^k) = 1 + t^k`.
pub fn gen_hyperbolic_neg(k: usize, order: usize) -> TruncatedSeries {
    binomial_series(1, k, &BigInt::one(), order)
}

/// `∏_k (1/(1 - t^k))^(e_k - h_k) (1 + t^k)^(h'_k)` through `t^order`.
pub fn zeta_from_orbits(orbits: &OrbitData, order: usize) -> TruncatedSeries {
    let mut product = TruncatedSeries::one(order);
    for (k, c) in orbits.iter() {
        let k = k as usize;
        if k > order {
            break;
        }
        let net = &c.h - &c.e;
        if !net.is_zero() {
            product = &product * &binomial_series(-1, k, &net, order);
        }
        if !c.h_prime.is_zero() {
            product = &product * &binomial_series(1, k, &c.h_prime, order);
        }
    }
    product
}

/// `L(f^n) = Σ_{k | n} k [e_k - h_k - (-1)^(n/k) h'_k]`.
pub fn lefschetz_from_orbits(orbits: &OrbitData, n: u64) -> BigInt {
    (1..=n)
        .filter(|k| n.is_multiple_of(*k))
        .map(|k| {
            let c = orbits.get(k);
            let hp = if (n / k).is_multiple_of(2) { c.h_prime.clone() } else { -c.h_prime.clone() };
            BigInt::from(k) * (&c.e - &c.h - hp)
        })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: &'static str,
    pub k: usize,
    pub order: usize,
    pub holds: bool,
}

/// Checks `f_E(t^k) f_H(t^k) = 1` and `f_{H'}(t^k) = f_E(t^k) f_H(t^{2k})`
/// for `1 <= k <= max_k` as truncated series.
pub fn bifurcation_relations(max_k: usize, order: usize) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        let pair = &gen_elliptic(k, order) * &gen_hyperbolic(k, order);
        out.push(RelationCheck {
            relation: "f_E(t^k) f_H(t^k) = 1",
            k,
            order,
            holds: pair == TruncatedSeries::one(order),
        });
        let split = &gen_elliptic(k, order) * &gen_hyperbolic(2 * k, order);
        out.push(RelationCheck {
            relation: "f_H'(t^k) = f_E(t^k) f_H(t^2k)",
            k,
            order,
            holds: gen_hyperbolic_neg(k, order) == split,
        });
    }
    out
}
