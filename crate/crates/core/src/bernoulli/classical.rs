//! Classical Bernoulli polynomials at integers, Genocchi numbers, Euler
//! polynomials at even integers, and the high-order expansions used by the
//! binomial identities.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::closed::{eval_prop1, eval_prop2, Representation};
use super::melzak::falling;
use super::{oracle_eval, BernoulliFamily, EvalSpec};
use crate::arith::{self, Rational};
use crate::rstirling::{rstir_rat, StirlingKind};
use crate::{Error, Result};

fn classical(family: BernoulliFamily, n: usize, m: i64) -> Rational {
    // The alpha = 1 sums divide by n + j for one of the two branches,
    // which is 0/0 at n = 0.
    if n == 0 {
        return Rational::one();
    }
    let spec = EvalSpec::new(n, Rational::one(), m);
    let value = if m < 0 {
        eval_prop1(family, &spec)
    } else {
        eval_prop2(family, &spec)
    };
    let value = value.expect("alpha = 1, p = n, q = 0 has no sampled poles for n >= 1");
    debug_assert!(
        m != 0 || eval_prop1(family, &spec).as_ref() == Ok(&value),
        "both closed forms must agree at 0"
    );
    value
}

/// `B_n(m)`, the classical Bernoulli polynomial at an integer.
pub fn bernoulli_first_at(n: usize, m: i64) -> Rational {
    classical(BernoulliFamily::FirstKind, n, m)
}

/// `b_n(m) = b_n^(1)(m)`.
pub fn bernoulli_second_at(n: usize, m: i64) -> Rational {
    classical(BernoulliFamily::SecondKind, n, m)
}

/// `B_n(r) = sum_j (-1)^j j!/(j+1) {n+r, j+r}_r`.
pub fn bernoulli_first_via_partitions(n: usize, r: usize) -> Rational {
    (0..=n)
        .map(|j| {
            arith::sign_pow(j)
                * Rational::new(arith::factorial(j), BigInt::from(j + 1))
                * rstir_rat(StirlingKind::SecondKind, n + r, j + r, r)
        })
        .sum()
}

/// The three ways of computing `G_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenocchiRoutes {
    /// `2 (1 - 4^n) B_{2n}` with `B_{2n}` from the generating function.
    pub product: Rational,
    /// `4n (1 - 4^n) sum_{j<=2n} (-1)^j/(2n+j) C(4n, 2n+j) [2n+j+1, j+1]`.
    pub via_cycles: Rational,
    /// `2 (2n+1) (1 - 4^n) C(4n, 2n)^-1 sum_{j<=2n} (-1)^j/(j+1) C(4n, 2n+j) {2n+j, j}`.
    pub via_partitions: Rational,
}

impl GenocchiRoutes {
    pub fn agree(&self) -> bool {
        self.product == self.via_cycles && self.product == self.via_partitions
    }
}

pub fn genocchi_routes(n: usize) -> Result<GenocchiRoutes> {
    if n == 0 {
        return Err(Error::InvalidParameters("Genocchi numbers start at n = 1".into()));
    }
    let factor = Rational::from_integer(BigInt::one() - BigInt::from(4).pow(n as u32));
    let product = arith::int(2) * &factor * oracle_eval(BernoulliFamily::FirstKind, 2 * n, &Rational::one(), 0);
    let via_cycles = arith::int(2) * &factor * Representation::FirstKindViaCycles.eval(2 * n)?;
    let via_partitions =
        arith::int(2) * &factor * Representation::FirstKindViaPartitions.eval(2 * n)?;
    Ok(GenocchiRoutes { product, via_cycles, via_partitions })
}

/// `G_n = 2 (1 - 2^{2n}) B_{2n}`, checked across all three routes.
pub fn genocchi(n: usize) -> Result<BigInt> {
    let routes = genocchi_routes(n)?;
    if !routes.agree() {
        return Err(Error::InternalMismatch(format!("Genocchi routes for n = {n}: {routes:?}")));
    }
    arith::as_integer(&routes.product).ok_or_else(|| {
        Error::InternalMismatch(format!("G_{n} = {} is not an integer", routes.product))
    })
}

/// `E_{n-1}(m) = (2/n) (B_n(m) - 2^n B_n(m/2))` for even `m`.
pub fn euler_at_even(n: usize, m: i64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::InvalidParameters("E_{n-1} needs n >= 1".into()));
    }
    if m % 2 != 0 {
        return Err(Error::OddArgument { m });
    }
    let two_pow = Rational::from_integer(BigInt::from(2).pow(n as u32));
    let diff = bernoulli_first_at(n, m) - two_pow * bernoulli_first_at(n, m / 2);
    Ok(Rational::new(BigInt::from(2), BigInt::from(n)) * diff)
}

/// `B_n^(n+k+1)(x)` and `b_n^(n+k+1)(x)` as finite sums of ordinary
/// Stirling numbers:
///
/// ```text
/// B_n^(n+k+1)(x) = C(n+k,k)^-1 sum_j (-1)^j C(n+k, j+k) [j+k, k] (x-1)_(n-j)
/// b_n^(n+k+1)(x) = C(n+k,k)^-1 sum_j C(n+k, j+k) {j+k, k} (x+1)^(n-j)
/// ```
pub fn expansion_high_order(family: BernoulliFamily, n: usize, k: usize, x: i64) -> Rational {
    let scale = arith::binomial_rat(n + k, k);
    let sum: Rational = (0..=n)
        .map(|j| {
            let width = arith::binomial_rat(n + k, j + k);
            match family {
                BernoulliFamily::FirstKind => {
                    arith::sign_pow(j)
                        * width
                        * rstir_rat(StirlingKind::FirstKindUnsigned, j + k, k, 0)
                        * falling(&arith::int(x - 1), n - j)
                }
                BernoulliFamily::SecondKind => {
                    width
                        * rstir_rat(StirlingKind::SecondKind, j + k, k, 0)
                        * arith::pow_rat(&arith::int(x + 1), n - j)
                }
            }
        })
        .fold(Rational::zero(), |a, b| a + b);
    sum / scale
}
