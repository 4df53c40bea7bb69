//! Exact rationals and their `"p/q"` wire form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Always `p/q` (also for integers, e.g. `1/1`), reduced, sign on `p`.
pub fn format_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or `"p"`; the result is reduced.
pub fn parse_ratio(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not an exact fraction: {text:?}"));
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_unit_interval(r: &Rational) -> bool {
    r > &Rational::zero() && r <= &Rational::one()
}

pub fn serialize<S: Serializer>(
    r: &Rational,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&format_ratio(r))
}

pub fn deserialize<'de, D: Deserializer<'de>>(
    deserializer: D,
) -> std::result::Result<Rational, D::Error> {
    let text = String::deserialize(deserializer)?;
    parse_ratio(&text).map_err(serde::de::Error::custom)
}

/// Serde adapter for maps and sequences of rationals.
pub mod seq {
    use super::*;
    use serde::ser::SerializeMap;
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<usize, Rational>,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut out = serializer.serialize_map(Some(map.len()))?;
        for (k, v) in map {
            out.serialize_entry(&k.to_string(), &format_ratio(v))?;
        }
        out.end()
    }
}

/// Serde adapter for big naturals as decimal strings.
pub mod natural {
    use num_bigint::BigUint;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(
        n: &BigUint,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&n.to_string())
    }
}
