//! Closed forms at integer arguments from r-Stirling numbers.
//!
//! At `x = -r` the sampled values `b_n^(-j-q)(-r)` are r-Stirling numbers
//! of the first kind; at `x = r` the values `B_n^(-j-q)(r)` are r-Stirling
//! numbers of the second kind. The other family follows from
//! `B_n^(a)(x) = b_n^(n+1-a)(x-1)`, which replaces the order by `n+1-a` and
//! `r` by `r+1`.

use num_traits::Zero;

use super::melzak::{binom_rat, melzak_eval};
use super::{natural_arg, BernoulliFamily, EvalSpec};
use crate::arith::{self, Rational};
use crate::rstirling::{rstir_rat, StirlingKind};
use crate::{Error, Result};

/// `n + 1 - alpha`, the dual order.
fn dual_order(n: usize, alpha: &Rational) -> Rational {
    arith::int(n as i64 + 1) - alpha
}

/// Value at `x = -r <= 0` from first-kind r-Stirling numbers:
///
/// ```text
/// b_n^(a)(-r) = (a+q) C(a+p+q, p) sum_j (-1)^(n+j)/(a+q+j) C(p,j) [n+r+j+q, r+j+q]_r / C(n+j+q, n)
/// B_n^(a)(-r) = same with a -> n+1-a and [.]_r -> [n+r+j+q+1, r+j+q+1]_(r+1)
/// ```
pub fn eval_prop1(family: BernoulliFamily, spec: &EvalSpec) -> Result<Rational> {
    spec.validate()?;
    let r = natural_arg(-spec.x, "the non-positive closed form")?;
    let EvalSpec { n, p, q, .. } = *spec;
    let (order, stirling_r) = match family {
        BernoulliFamily::SecondKind => (spec.alpha.clone(), r),
        BernoulliFamily::FirstKind => (dual_order(n, &spec.alpha), r + 1),
    };
    let sign = arith::sign_pow(n);
    let values: Vec<Rational> = (0..=p)
        .map(|j| {
            let m = stirling_r + j + q;
            &sign * rstir_rat(StirlingKind::FirstKindUnsigned, n + m, m, stirling_r)
                / arith::binomial_rat(n + j + q, n)
        })
        .collect();
    melzak_eval(&values, &order, q)
}

/// Value at `x = r >= 0` from second-kind r-Stirling numbers:
///
/// ```text
/// B_n^(a)(r) = (a+q) C(a+q+p, p) sum_j (-1)^j/(a+q+j) C(p,j) {n+r+q+j, r+q+j}_r / C(n+q+j, n)
/// b_n^(a)(r) = same with a -> n+1-a and {.}_r -> {n+r+q+j+1, r+q+j+1}_(r+1)
/// ```
pub fn eval_prop2(family: BernoulliFamily, spec: &EvalSpec) -> Result<Rational> {
    spec.validate()?;
    let r = natural_arg(spec.x, "the non-negative closed form")?;
    let EvalSpec { n, p, q, .. } = *spec;
    let (order, stirling_r) = match family {
        BernoulliFamily::FirstKind => (spec.alpha.clone(), r),
        BernoulliFamily::SecondKind => (dual_order(n, &spec.alpha), r + 1),
    };
    let values: Vec<Rational> = (0..=p)
        .map(|j| {
            let m = stirling_r + q + j;
            rstir_rat(StirlingKind::SecondKind, n + m, m, stirling_r)
                / arith::binomial_rat(n + q + j, n)
        })
        .collect();
    melzak_eval(&values, &order, q)
}

/// Shared shape of the `p = n, q = 0` displays:
/// `a C(top, n) / C(2n, n) * sum_j sign(j) / (a + j) C(2n, n+j) S(j)`.
fn short_form(
    n: usize,
    order: &Rational,
    top: &Rational,
    sign: impl Fn(usize) -> Rational,
    stirling: impl Fn(usize) -> Rational,
) -> Result<Rational> {
    let mut sum = Rational::zero();
    for j in 0..=n {
        let denominator = order + arith::int(j as i64);
        if denominator.is_zero() {
            return Err(Error::PoleAtSampledPoint { j, denominator: arith::format_rational(order) });
        }
        sum += sign(j) * arith::binomial_rat(2 * n, n + j) * stirling(j) / denominator;
    }
    Ok(order * binom_rat(top, n) / arith::binomial_rat(2 * n, n) * sum)
}

/// The `p = n, q = 0` form of [`eval_prop1`], written out directly:
///
/// ```text
/// b_n^(a)(-r) = a C(a+n, n) C(2n,n)^-1 sum_j (-1)^(n+j)/(a+j) C(2n, n+j) [n+r+j, r+j]_r
/// B_n^(a)(-r) = (n+1-a) C(2n-a+1, n) C(2n,n)^-1 sum_j (-1)^(n+j)/(n+1-a+j) C(2n, n+j) [n+r+j+1, r+j+1]_(r+1)
/// ```
pub fn short_form_at_minus_r(
    family: BernoulliFamily,
    n: usize,
    alpha: &Rational,
    r: usize,
) -> Result<Rational> {
    let sign = |j: usize| arith::sign_pow(n + j);
    match family {
        BernoulliFamily::SecondKind => short_form(
            n,
            alpha,
            &(alpha + arith::int(n as i64)),
            sign,
            |j| rstir_rat(StirlingKind::FirstKindUnsigned, n + r + j, r + j, r),
        ),
        BernoulliFamily::FirstKind => short_form(
            n,
            &dual_order(n, alpha),
            &(arith::int(2 * n as i64 + 1) - alpha),
            sign,
            |j| rstir_rat(StirlingKind::FirstKindUnsigned, n + r + j + 1, r + j + 1, r + 1),
        ),
    }
}

/// The `p = n, q = 0` form of [`eval_prop2`]:
///
/// ```text
/// B_n^(a)(r) = a C(a+n, n) C(2n,n)^-1 sum_j (-1)^j/(a+j) C(2n, n+j) {n+r+j, r+j}_r
/// b_n^(a)(r) = (n+1-a) C(2n+1-a, n) C(2n,n)^-1 sum_j (-1)^j/(n+1-a+j) C(2n, n+j) {n+r+j+1, r+j+1}_(r+1)
/// ```
pub fn short_form_at_r(
    family: BernoulliFamily,
    n: usize,
    alpha: &Rational,
    r: usize,
) -> Result<Rational> {
    let sign = arith::sign_pow;
    match family {
        BernoulliFamily::FirstKind => short_form(
            n,
            alpha,
            &(alpha + arith::int(n as i64)),
            sign,
            |j| rstir_rat(StirlingKind::SecondKind, n + r + j, r + j, r),
        ),
        BernoulliFamily::SecondKind => short_form(
            n,
            &dual_order(n, alpha),
            &(arith::int(2 * n as i64 + 1) - alpha),
            sign,
            |j| rstir_rat(StirlingKind::SecondKind, n + r + j + 1, r + j + 1, r + 1),
        ),
    }
}

/// The four finite sums for the classical numbers `B_n = B_n^(1)(0)` and
/// `b_n = b_n^(1)(0)` in terms of ordinary Stirling numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    /// `B_n = n sum_j (-1)^(n+j)/(n+j) C(2n, n+j) [n+j+1, j+1]`
    FirstKindViaCycles,
    /// `B_n = (n+1) C(2n,n)^-1 sum_j (-1)^j/(j+1) C(2n, n+j) {n+j, j}`
    FirstKindViaPartitions,
    /// `b_n = (n+1) C(2n,n)^-1 sum_j (-1)^(n+j)/(j+1) C(2n, n+j) [n+j, j]`
    SecondKindViaCycles,
    /// `b_n = n sum_j (-1)^j/(n+j) C(2n, n+j) {n+j+1, j+1}`
    SecondKindViaPartitions,
}

impl Representation {
    pub const ALL: [Representation; 4] = [
        Representation::FirstKindViaCycles,
        Representation::FirstKindViaPartitions,
        Representation::SecondKindViaCycles,
        Representation::SecondKindViaPartitions,
    ];

    pub fn family(self) -> BernoulliFamily {
        match self {
            Representation::FirstKindViaCycles | Representation::FirstKindViaPartitions => {
                BernoulliFamily::FirstKind
            }
            _ => BernoulliFamily::SecondKind,
        }
    }

    /// Evaluates the sum. The `n`-prefixed forms divide by `n + j` and are
    /// undefined at `n = 0`, where they report a pole at `j = 0`.
    pub fn eval(self, n: usize) -> Result<Rational> {
        use StirlingKind::{FirstKindUnsigned as Cycles, SecondKind as Blocks};
        let ord = |kind, a: usize, b: usize| rstir_rat(kind, a, b, 0);
        let central = arith::binomial_rat(2 * n, n);
        let mut sum = Rational::zero();
        for j in 0..=n {
            let width = arith::binomial_rat(2 * n, n + j);
            let term = match self {
                Representation::FirstKindViaCycles | Representation::SecondKindViaPartitions => {
                    if n + j == 0 {
                        return Err(Error::PoleAtSampledPoint { j, denominator: "0".into() });
                    }
                    let (sign, s) = if self == Representation::FirstKindViaCycles {
                        (arith::sign_pow(n + j), ord(Cycles, n + j + 1, j + 1))
                    } else {
                        (arith::sign_pow(j), ord(Blocks, n + j + 1, j + 1))
                    };
                    sign * width * s / arith::int((n + j) as i64)
                }
                Representation::FirstKindViaPartitions => {
                    arith::sign_pow(j) * width * ord(Blocks, n + j, j) / arith::int(j as i64 + 1)
                }
                Representation::SecondKindViaCycles => {
                    arith::sign_pow(n + j) * width * ord(Cycles, n + j, j)
                        / arith::int(j as i64 + 1)
                }
            };
            sum += term;
        }
        Ok(match self {
            Representation::FirstKindViaCycles | Representation::SecondKindViaPartitions => {
                arith::int(n as i64) * sum
            }
            _ => arith::int(n as i64 + 1) * sum / central,
        })
    }
}
