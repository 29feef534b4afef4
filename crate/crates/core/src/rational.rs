//! Exact scalars and the `"p/q"` text form used by every serialized document.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Always `p/q`, even for integers, so documents never mix two spellings.
pub fn format_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Integers print bare, everything else as `p/q`.
pub fn format_short(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format_pq(r)
    }
}

/// Accepts `p/q` or a bare integer; no decimal points.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Generalized binomial coefficient `top (top-1) ... (top-k+1) / k!`.
///
/// Zero for `k < 0`; valid for negative `top`, which makes
/// `C(m + n, n)` a polynomial in `m`.
pub fn binomial(top: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(top - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_q(top: i64, k: i64) -> Rational {
    Rational::from_integer(binomial(top, k))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow2(n: u32) -> Rational {
    Rational::from_integer(BigInt::one() << n as usize)
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// serde adapter: a `Rational` field as a `"p/q"` string.
pub mod pq {
    use super::{format_pq, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_pq(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}
