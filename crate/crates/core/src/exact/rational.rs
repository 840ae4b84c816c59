//! Helpers around [`BigRational`]: parsing from `"p/q"` strings, the serde
//! string codec used by every JSON schema, and exact square detection.

use std::fmt;

use num_bigint::{BigInt, Sign as BigSign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Sign of a nonzero quantity (or zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn from_i32(s: i32) -> Sign {
        match s.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn flip(self) -> Sign {
        Sign::from_i32(-self.as_i32())
    }

    pub fn mul(self, other: Sign) -> Sign {
        Sign::from_i32(self.as_i32() * other.as_i32())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Returns `Some(r)` with `r >= 0` and `r*r == x` when `x` is the square of a rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = int_sqrt(x.numer())?;
    let d = int_sqrt(x.denom())?;
    Some(Rational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == BigSign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Writes `x = s^2 * d` with `d` an integer free of small square factors,
/// returning `(s, d)`. Square factors of primes above the trial bound are
/// left inside `d`; the result is still a valid factorization.
pub fn split_square(x: &Rational) -> (Rational, BigInt) {
    // p/q = p*q / q^2
    let mut d = x.numer() * x.denom();
    let mut s = Rational::new(BigInt::one(), x.denom().clone());
    let mut p = 2u32;
    while p < 1000 {
        let pp = BigInt::from(p * p);
        while (&d % &pp).is_zero() {
            d /= &pp;
            s *= Rational::from_integer(BigInt::from(p));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (s, d)
}

pub mod serde_str {
    //! `"p/q"` string codec for a single [`Rational`].
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_matrix {
    //! `[["p/q", ...], ...]` codec for a matrix of rationals.
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(m.len()))?;
        for row in m {
            let row: Vec<String> = row.iter().map(|r| r.to_string()).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        rows.iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn squares() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
        let (s, d) = split_square(&frac(8, 3));
        assert_eq!(d, BigInt::from(6));
        assert_eq!(&s * &s * Rational::from_integer(d), frac(8, 3));
    }
}
