//! Truncated formal power series over exact rationals.
//!
//! A [`Series`] of order `N` holds the coefficients of `t^0 .. t^(N-1)`.
//! Binary operations truncate to the smaller order of their operands, so
//! mixed-order pipelines compose without errors. `exp` and `log` use the
//! quadratic coefficient recurrences.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// The order is the number of coefficients given.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Series { coeffs }
    }

    /// Integer coefficients, padded with zeros (or truncated) to `order`.
    pub fn from_ints(ints: &[i64], order: usize) -> Self {
        let coeffs = (0..order)
            .map(|i| ints.get(i).map_or_else(Rational::zero, |&c| arith::int(c)))
            .collect();
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![Rational::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        if let Some(c0) = s.coeffs.first_mut() {
            *c0 = c;
        }
        s
    }

    /// `exp(c t)`: coefficients `c^i / i!`.
    pub fn exp_linear(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut term = Rational::one();
        for i in 0..order {
            if i > 0 {
                term = term * c / arith::int(i as i64);
            }
            coeffs.push(term.clone());
        }
        Series { coeffs }
    }

    /// `(exp(t) - 1) / t`: coefficients `1 / (i+1)!`.
    pub fn expm1_over_t(order: usize) -> Self {
        let coeffs = (0..order)
            .map(|i| Rational::new(BigInt::one(), arith::factorial(i + 1)))
            .collect();
        Series { coeffs }
    }

    /// `ln(1 + t) / t`: coefficients `(-1)^i / (i+1)`.
    pub fn log1p_over_t(order: usize) -> Self {
        let coeffs = (0..order)
            .map(|i| arith::sign_pow(i) / arith::int(i as i64 + 1))
            .collect();
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`; zero past the truncation order.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series { coeffs: self.coeffs.iter().take(order).cloned().collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Quotient `self / divisor`.
    pub fn div(&self, divisor: &Series) -> Result<Series> {
        let order = self.order().min(divisor.order());
        if order == 0 {
            return Ok(Series::zero(0));
        }
        let b0 = &divisor.coeffs[0];
        if b0.is_zero() {
            return Err(Error::DivisionByZeroConstantTerm);
        }
        let mut q: Vec<Rational> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..=n {
                acc -= &divisor.coeffs[i] * &q[n - i];
            }
            q.push(acc / b0);
        }
        Ok(Series { coeffs: q })
    }

    /// Formal logarithm of a series with constant term 1, via the
    /// logarithmic derivative `L' = a'/a`.
    pub fn log(&self) -> Result<Series> {
        let order = self.order();
        if order == 0 {
            return Ok(Series::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let derivative = self.derivative();
        let ratio = derivative.div(&self.truncate(order - 1))?;
        Ok(ratio.integral())
    }

    /// Formal exponential of a series with constant term 0:
    /// `n E_n = sum_{k=1}^{n} k a_k E_{n-k}`.
    pub fn exp(&self) -> Result<Series> {
        let order = self.order();
        if order == 0 {
            return Ok(Series::zero(0));
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let weighted: Vec<Rational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * arith::int(k as i64))
            .collect();
        let mut e: Vec<Rational> = Vec::with_capacity(order);
        e.push(Rational::one());
        for n in 1..order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !weighted[k].is_zero() {
                    acc += &weighted[k] * &e[n - k];
                }
            }
            e.push(acc / arith::int(n as i64));
        }
        Ok(Series { coeffs: e })
    }

    /// `self^alpha = exp(alpha * log(self))` for a unit series.
    pub fn pow(&self, alpha: &Rational) -> Result<Series> {
        self.log()?.scale(alpha).exp()
    }

    /// The exponential-generating-function coefficient `n! [t^n]`.
    pub fn egf_coeff(&self, n: usize) -> Result<Rational> {
        let c = self
            .coeffs
            .get(n)
            .ok_or(Error::OrderExceeded { index: n, order: self.order() })?;
        Ok(c * arith::from_big(arith::factorial(n)))
    }

    /// Formal derivative; the order drops by one.
    fn derivative(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * arith::int(i as i64))
            .collect();
        Series { coeffs }
    }

    /// Antiderivative with zero constant term; the order grows by one.
    fn integral(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / arith::int(i as i64 + 1)),
        );
        Series { coeffs }
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Series { coeffs }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

/// Cauchy product, truncated to the smaller order.
impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order];
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Series { coeffs }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Series {
            type Output = Series;

            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
