//! JSON encodings shared by every schema.
//!
//! Exact numbers are written as JSON integers when they are integral and
//! below 2^53 in magnitude, and as `"p/q"` strings otherwise. Readers accept
//! both forms.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serializer};
use serde_json::{json, Value};

use crate::exactalg::{parse_rational, Matrix, Polynomial, Rational};
use crate::series::{RationalFunction, TruncatedSeries};
use crate::symclass::{OrbitCounts, OrbitData};
use crate::zeta::GradedMap;

const SAFE_INTEGER: i64 = 1 << 53;

pub fn rational_to_value(r: &Rational) -> Value {
    if r.is_integer() {
        bigint_to_value(r.numer())
    } else {
        Value::String(r.to_string())
    }
}

pub fn bigint_to_value(n: &BigInt) -> Value {
    if n.abs() < BigInt::from(SAFE_INTEGER) {
        Value::from(i64::try_from(n).expect("below 2^53"))
    } else {
        Value::String(n.to_string())
    }
}

pub fn rational_from_value(v: &Value) -> crate::Result<Rational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(u.into()))
            } else {
                Err(crate::Error::Parse(format!(
                    "non-integer JSON number {n}; write rationals as \"p/q\" strings"
                )))
            }
        }
        Value::String(s) => parse_rational(s),
        other => Err(crate::Error::Parse(format!("expected a number, got {other}"))),
    }
}

pub fn bigint_from_value(v: &Value) -> crate::Result<BigInt> {
    let r = rational_from_value(v)?;
    if !r.is_integer() {
        return Err(crate::Error::Parse(format!("expected an integer, got {r}")));
    }
    Ok(r.to_integer())
}

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_some(&rational_to_value(r))
}

pub fn de_rational<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    rational_from_value(&Value::deserialize(d)?).map_err(D::Error::custom)
}

pub fn ser_rationals<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational_to_value))
}

pub fn de_rationals<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
    Vec::<Value>::deserialize(d)?
        .iter()
        .map(rational_from_value)
        .collect::<crate::Result<_>>()
        .map_err(D::Error::custom)
}

/// Always `"p/q"` strings, as the series schema asks for.
pub fn ser_rational_strings<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

pub fn ser_bigint<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_some(&bigint_to_value(n))
}

pub fn de_bigint<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    bigint_from_value(&Value::deserialize(d)?).map_err(D::Error::custom)
}

pub fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(bigint_to_value))
}

fn parse_err(msg: impl Into<String>) -> crate::Error {
    crate::Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> crate::Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field `{key}`")))
}

fn array<'a>(v: &'a Value, what: &str) -> crate::Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("`{what}` must be an array")))
}

fn rationals_from_value(v: &Value, what: &str) -> crate::Result<Vec<Rational>> {
    array(v, what)?.iter().map(rational_from_value).collect()
}

pub fn matrix_rows_to_value(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(rational_to_value).collect()))
            .collect(),
    )
}

/// `[[entry, ...], ...]`
pub fn matrix_from_rows_value(v: &Value) -> crate::Result<Matrix> {
    let rows = array(v, "rows")?
        .iter()
        .map(|r| rationals_from_value(r, "row"))
        .collect::<crate::Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

/// `{"rows": [[entry, ...], ...]}`
pub fn matrix_to_json(m: &Matrix) -> Value {
    json!({ "rows": matrix_rows_to_value(m) })
}

pub fn matrix_from_json(v: &Value) -> crate::Result<Matrix> {
    matrix_from_rows_value(field(v, "rows")?)
}

/// `{"coefficients": [entry, ...]}`, constant term first.
pub fn polynomial_to_json(p: &Polynomial) -> Value {
    json!({ "coefficients": p.coefficients().iter().map(rational_to_value).collect::<Vec<_>>() })
}

pub fn polynomial_from_json(v: &Value) -> crate::Result<Polynomial> {
    Ok(Polynomial::new(rationals_from_value(field(v, "coefficients")?, "coefficients")?))
}

/// `{"order": N, "coefficients": ["p/q", ...]}`
pub fn series_to_json(s: &TruncatedSeries) -> Value {
    json!({
        "order": s.order(),
        "coefficients": s.coefficients().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn series_from_json(v: &Value) -> crate::Result<TruncatedSeries> {
    let order = field(v, "order")?
        .as_u64()
        .ok_or_else(|| parse_err("`order` must be a non-negative integer"))? as usize;
    let coeffs = rationals_from_value(field(v, "coefficients")?, "coefficients")?;
    if coeffs.len() > order + 1 {
        return Err(parse_err(format!("{} coefficients for order {order}", coeffs.len())));
    }
    Ok(TruncatedSeries::new(coeffs, order))
}

/// `{"numerator": {polynomial}, "denominator": {polynomial}}`
pub fn ratfun_to_json(r: &RationalFunction) -> Value {
    json!({
        "numerator": polynomial_to_json(r.numerator()),
        "denominator": polynomial_to_json(r.denominator()),
    })
}

pub fn ratfun_from_json(v: &Value) -> crate::Result<RationalFunction> {
    RationalFunction::new(
        polynomial_from_json(field(v, "numerator")?)?,
        polynomial_from_json(field(v, "denominator")?)?,
    )
}

/// Either `{"top_degree": d, "maps": {"0": [[1]], "1": [[...]], ...}}` or
/// the shortcut `{"surface_monodromy": [[...]]}`. Missing or empty degrees
/// have rank zero.
pub fn graded_map_from_json(v: &Value) -> crate::Result<GradedMap> {
    if let Some(a) = v.get("surface_monodromy") {
        return GradedMap::surface(&matrix_from_rows_value(a)?);
    }
    let top = field(v, "top_degree")?
        .as_u64()
        .ok_or_else(|| parse_err("`top_degree` must be a non-negative integer"))? as usize;
    let maps = field(v, "maps")?
        .as_object()
        .ok_or_else(|| parse_err("`maps` must be an object keyed by degree"))?;
    let mut out: Vec<Option<Matrix>> = vec![None; top + 1];
    for (key, m) in maps {
        let k: usize = key.parse().map_err(|_| parse_err(format!("bad degree key `{key}`")))?;
        if k > top {
            return Err(parse_err(format!("degree {k} exceeds top_degree {top}")));
        }
        let empty = m.as_array().is_some_and(|r| r.is_empty() || r.iter().all(|x| x.as_array().is_some_and(Vec::is_empty)));
        out[k] = if empty { None } else { Some(matrix_from_rows_value(m)?) };
    }
    GradedMap::new(out)
}

pub fn graded_map_to_json(g: &GradedMap) -> Value {
    let maps: serde_json::Map<String, Value> = g
        .maps()
        .iter()
        .enumerate()
        .map(|(k, m)| {
            (k.to_string(), m.as_ref().map_or(Value::Array(vec![]), matrix_rows_to_value))
        })
        .collect();
    json!({ "top_degree": g.top_degree(), "maps": maps })
}

/// `{"orbits": [{"period": k, "e": .., "h": .., "h_prime": ..}, ...]}`
pub fn orbit_data_to_json(o: &OrbitData) -> Value {
    let orbits: Vec<Value> = o
        .iter()
        .map(|(k, c)| {
            json!({
                "period": k,
                "e": bigint_to_value(&c.e),
                "h": bigint_to_value(&c.h),
                "h_prime": bigint_to_value(&c.h_prime),
            })
        })
        .collect();
    json!({ "orbits": orbits })
}

pub fn orbit_data_from_json(v: &Value) -> crate::Result<OrbitData> {
    let mut data = OrbitData::new();
    for entry in array(field(v, "orbits")?, "orbits")? {
        let period = field(entry, "period")?
            .as_u64()
            .ok_or_else(|| parse_err("`period` must be a positive integer"))?;
        let count = |key: &str| entry.get(key).map_or(Ok(BigInt::from(0)), bigint_from_value);
        data.insert(period, OrbitCounts { e: count("e")?, h: count("h")?, h_prime: count("h_prime")? })?;
    }
    Ok(data)
}
