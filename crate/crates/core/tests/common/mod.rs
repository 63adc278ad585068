//! Reference values computed without the library's tables, series or
//! closed forms.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn fact(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// Multiplies polynomials given by ascending coefficients.
fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `[n, k]_r` as the coefficient of `x^(k-r)` in `(x+r)(x+r+1)...(x+n-1)`.
pub fn first_kind(n: usize, k: usize, r: usize) -> BigUint {
    if n < r || k < r || k > n {
        return BigUint::zero();
    }
    let mut p = vec![BigInt::one()];
    for i in r..n {
        p = poly_mul(&p, &[BigInt::from(i), BigInt::one()]);
    }
    p[k - r].to_biguint().unwrap()
}

/// `{n, k}_r = 1/(k-r)! sum_j (-1)^(k-r-j) C(k-r, j) (j+r)^(n-r)`.
pub fn second_kind(n: usize, k: usize, r: usize) -> BigUint {
    if n < r || k < r || k > n {
        return BigUint::zero();
    }
    let m = k - r;
    let mut acc = BigInt::zero();
    for j in 0..=m {
        let term = binom(m, j) * BigInt::from(j + r).pow((n - r) as u32);
        if (m - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let v = acc / fact(m);
    assert!(!v.is_negative());
    v.to_biguint().unwrap()
}

/// Classical Bernoulli numbers from `sum_{k<=n} C(n+1, k) B_k = 0`.
pub fn bernoulli_numbers(max: usize) -> Vec<Q> {
    let mut b = vec![Q::one()];
    for n in 1..=max {
        let s: Q = (0..n).map(|k| Q::from_integer(binom(n + 1, k)) * &b[k]).sum();
        b.push(-s / Q::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// `B_n(x) = sum_k C(n, k) B_k x^(n-k)`.
pub fn bernoulli_poly(n: usize, x: &Q) -> Q {
    let b = bernoulli_numbers(n);
    (0..=n)
        .map(|k| Q::from_integer(binom(n, k)) * &b[k] * pow(x, n - k))
        .sum()
}

pub fn pow(x: &Q, e: usize) -> Q {
    (0..e).fold(Q::one(), |a, _| a * x)
}

/// `B_n^(m)(x)` for a positive integer order `m`, by the convolution
/// `B^(a+1)_n(x) = sum_k C(n, k) B^(a)_k(x) B_(n-k)`.
pub fn bernoulli_higher(n: usize, m: usize, x: &Q) -> Q {
    assert!(m >= 1);
    let b = bernoulli_numbers(n);
    let mut cur: Vec<Q> = (0..=n).map(|k| bernoulli_poly(k, x)).collect();
    for _ in 1..m {
        cur = (0..=n)
            .map(|j| (0..=j).map(|k| Q::from_integer(binom(j, k)) * &cur[k] * &b[j - k]).sum())
            .collect();
    }
    cur[n].clone()
}

/// `b_n = integral_0^1 x(x-1)...(x-n+1) dx`, Bernoulli numbers of the
/// second kind in the factorial normalisation.
pub fn bernoulli_second_numbers(n: usize) -> Q {
    let mut p = vec![BigInt::one()];
    for i in 0..n {
        p = poly_mul(&p, &[-BigInt::from(i), BigInt::one()]);
    }
    p.iter()
        .enumerate()
        .map(|(i, c)| Q::new(c.clone(), BigInt::from(i + 1)))
        .sum()
}

pub fn bell(n: usize) -> BigUint {
    (0..=n).map(|k| second_kind(n, k, 0)).sum()
}
