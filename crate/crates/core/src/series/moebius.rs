use super::TruncatedSeries;
use crate::exactalg::int;
use crate::{Error, Result};

/// The Möbius function, by trial division.
pub fn moebius(m: u64) -> Result<i8> {
    if m == 0 {
        return Err(Error::Domain("moebius(0) is undefined".into()));
    }
    let mut n = m;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

/// `F(t) = exp(Σ_{m ≥ 1} μ(m) t^m)` through `t^order`.
///
/// This is the weight for which `∏_{k ≥ 1} F(t^k) = e^t`.
pub fn weight_f(order: usize) -> TruncatedSeries {
    let mut phi = vec![int(0)];
    phi.extend((1..=order as u64).map(|m| int(moebius(m).expect("m >= 1").into())));
    TruncatedSeries::new(phi, order)
        .exp()
        .expect("zero constant term")
}
