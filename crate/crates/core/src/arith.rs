//! Scalar helpers shared by every module: the [`Rational`] scalar, exact
//! binomials, factorials and a locale-free rational parser.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn from_big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

pub fn from_biguint(v: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(v.clone()))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^e` as a rational.
pub fn sign_pow(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient of naturals; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_rat(n: usize, k: usize) -> Rational {
    from_big(binomial(n, k))
}

/// `x^e` for a rational `x`, with `0^0 = 1`.
pub fn pow_rat(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

/// Parses `a`, `-a`, `+a`, `a/b`, `-a/b`. The denominator must be non-zero;
/// the result is canonicalised.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = parse_int(num).ok_or_else(err)?;
    let den: BigInt = parse_int(den).ok_or_else(err)?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Renders `num/den`, or just `num` when the value is an integer.
pub fn format_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Returns the value as an integer if it is one.
pub fn as_integer(v: &Rational) -> Option<BigInt> {
    v.is_integer().then(|| v.numer().clone())
}

pub fn as_natural(v: &Rational) -> Option<BigUint> {
    as_integer(v).and_then(|i| (!i.is_negative()).then(|| i.magnitude().clone()))
}
