//! Exact rational helpers shared by every module.
//!
//! All coordinates, heights and coefficients are [`Q`] (arbitrary precision
//! rationals, always in lowest terms). On the wire a rational is the string
//! `"p/q"`, or `"p"` when the denominator is one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_from_i128(n: i128) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Formats `p/q`, or `p` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `-p`, `p/q` (whitespace tolerant).
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::parse(0, format!("invalid rational literal {t:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::parse(0, "zero denominator"));
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

pub fn to_i64(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

pub fn to_i128(x: &BigInt) -> Option<i128> {
    x.to_i128()
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Divides an integer vector by the gcd of its entries. The zero vector is
/// returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

/// Writes a rational vector `v` as `lambda * u` with `u` primitive integer.
/// Returns `None` for the zero vector.
pub fn rational_direction(v: &[Q]) -> Option<(Q, Vec<i64>)> {
    if v.iter().all(Zero::is_zero) {
        return None;
    }
    let den = common_denominator(v.iter());
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Q::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let dir: Vec<i64> = ints
        .iter()
        .map(|x| (x / &g).to_i64().expect("direction fits in i64"))
        .collect();
    let lambda = Q::new(g, den);
    Some((lambda.abs(), dir))
}

pub mod serde_q {
    //! `#[serde(with = "...")]` adapters writing rationals as `"p/q"` strings.
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let raw = String::deserialize(d)?;
        parse_q(&raw).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(xs.len()))?;
            for x in xs {
                seq.serialize_element(&fmt_q(x))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Q>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|r| parse_q(r).map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod vec2 {
        use super::*;

        pub fn serialize<S: Serializer>(
            xs: &[Vec<Q>],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            let raw: Vec<Vec<String>> = xs.iter().map(|v| v.iter().map(fmt_q).collect()).collect();
            serde::Serialize::serialize(&raw, s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Vec<Q>>, D::Error> {
            let raw = Vec::<Vec<String>>::deserialize(d)?;
            raw.iter()
                .map(|v| {
                    v.iter()
                        .map(|r| parse_q(r).map_err(serde::de::Error::custom))
                        .collect()
                })
                .collect()
        }
    }

    pub mod opt_vec {
        use super::*;

        pub fn serialize<S: Serializer>(
            xs: &[Option<Q>],
            s: S,
        ) -> std::result::Result<S::Ok, S::Error> {
            let raw: Vec<Option<String>> = xs.iter().map(|v| v.as_ref().map(fmt_q)).collect();
            serde::Serialize::serialize(&raw, s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> std::result::Result<Vec<Option<Q>>, D::Error> {
            let raw = Vec::<Option<String>>::deserialize(d)?;
            raw.iter()
                .map(|v| {
                    v.as_ref()
                        .map(|r| parse_q(r).map_err(serde::de::Error::custom))
                        .transpose()
                })
                .collect()
        }
    }
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("-6/4").unwrap(), qf(-3, 2));
        assert_eq!(fmt_q(&qf(-3, 2)), "-3/2");
        assert_eq!(fmt_q(&q(7)), "7");
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
    }

    #[test]
    fn directions() {
        let (l, d) = rational_direction(&[qf(1, 2), qf(1, 2)]).unwrap();
        assert_eq!(l, qf(1, 2));
        assert_eq!(d, vec![1, 1]);
        let (l, d) = rational_direction(&[q(3), q(6)]).unwrap();
        assert_eq!(l, q(3));
        assert_eq!(d, vec![1, 2]);
        assert!(rational_direction(&[q(0), q(0)]).is_none());
    }
}
