//! Higher-order Bernoulli polynomials of both kinds at integer arguments.
//!
//! ```text
//! sum_n B_n^(a)(x) t^n/n! = (t/(exp(t)-1))^a exp(xt)
//! sum_n b_n^(a)(x) t^n/n! = (t/ln(1+t))^a (1+t)^x
//! ```
//!
//! Naming follows the generating functions: [`BernoulliFamily::FirstKind`]
//! is `B`, [`BernoulliFamily::SecondKind`] is `b`. (Some literature swaps the
//! prose labels "first"/"second kind" for the numbers `B_n` and `b_n`; the
//! symbols and generating functions above are what this crate implements.)
//!
//! [`oracle_eval`] expands the generating function and is the ground truth
//! for everything else. The closed forms in [`closed`] reconstruct the value
//! at an arbitrary rational order from exact r-Stirling data at non-positive
//! integer orders through Melzak's interpolation formula ([`melzak`]).

pub mod classical;
pub mod closed;
pub mod melzak;

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};
use crate::rstirling::{rstir_rat, StirlingKind};
use crate::series::Series;
use crate::{Error, Result};

pub use classical::{
    bernoulli_first_at, bernoulli_first_via_partitions, bernoulli_second_at, euler_at_even,
    expansion_high_order, genocchi, genocchi_routes, GenocchiRoutes,
};
pub use closed::{eval_prop1, eval_prop2, short_form_at_minus_r, short_form_at_r, Representation};
pub use melzak::{binom_rat, falling, melzak_eval, rising};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BernoulliFamily {
    /// `B_n^(a)(x)`.
    #[serde(rename = "B")]
    FirstKind,
    /// `b_n^(a)(x)`.
    #[serde(rename = "b")]
    SecondKind,
}

impl BernoulliFamily {
    pub const ALL: [BernoulliFamily; 2] = [BernoulliFamily::FirstKind, BernoulliFamily::SecondKind];

    pub fn symbol(self) -> &'static str {
        match self {
            BernoulliFamily::FirstKind => "B",
            BernoulliFamily::SecondKind => "b",
        }
    }
}

impl fmt::Display for BernoulliFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for BernoulliFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" => Ok(BernoulliFamily::FirstKind),
            "b" => Ok(BernoulliFamily::SecondKind),
            _ => Err(format!("unknown family {s:?} (expected B or b)")),
        }
    }
}

/// A request for `B_n^(alpha)(x)` or `b_n^(alpha)(x)` through a closed form.
///
/// `p >= n` is the number of Melzak sample points minus one and `q` shifts
/// the sampled orders to `-q, -q-1, .., -q-p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalSpec {
    pub n: usize,
    pub alpha: Rational,
    pub x: i64,
    pub p: usize,
    pub q: usize,
}

impl EvalSpec {
    /// Defaults to the shortest sum, `p = n` and `q = 0`.
    pub fn new(n: usize, alpha: Rational, x: i64) -> Self {
        EvalSpec { n, alpha, x, p: n, q: 0 }
    }

    pub fn with_p(mut self, p: usize) -> Self {
        self.p = p;
        self
    }

    pub fn with_q(mut self, q: usize) -> Self {
        self.q = q;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.p < self.n {
            return Err(Error::InvalidParameters(format!(
                "p = {} must be at least n = {}",
                self.p, self.n
            )));
        }
        Ok(())
    }
}

/// `n! [t^n]` of the defining generating function, truncated at order
/// `n + 1`.
pub fn oracle_eval(family: BernoulliFamily, n: usize, alpha: &Rational, x: i64) -> Rational {
    let order = n + 1;
    let (base, shift) = match family {
        BernoulliFamily::FirstKind => (
            Series::expm1_over_t(order),
            Series::exp_linear(&arith::int(x), order),
        ),
        BernoulliFamily::SecondKind => (
            Series::log1p_over_t(order),
            Series::from_ints(&[1, 1], order)
                .pow(&arith::int(x))
                .expect("1 + t is a unit series"),
        ),
    };
    let kernel = base.pow(&-alpha).expect("kernel has constant term 1");
    (&kernel * &shift)
        .egf_coeff(n)
        .expect("order n + 1 covers index n")
}

/// Values at negative integer order from r-Stirling numbers:
/// `B_n^(-k)(r) = {n+r+k, k+r}_r / C(n+k, k)` and
/// `b_n^(-k)(-r) = (-1)^n [n+r+k, k+r]_r / C(n+k, k)`.
///
/// Note the argument is `+r` for `B` and `-r` for `b`.
pub fn special_neg_order(family: BernoulliFamily, n: usize, k: usize, r: usize) -> Rational {
    let scale = arith::binomial_rat(n + k, k);
    match family {
        BernoulliFamily::FirstKind => {
            rstir_rat(StirlingKind::SecondKind, n + r + k, k + r, r) / scale
        }
        BernoulliFamily::SecondKind => {
            arith::sign_pow(n) * rstir_rat(StirlingKind::FirstKindUnsigned, n + r + k, k + r, r)
                / scale
        }
    }
}

/// Closed-form evaluation with exactly the requested `(p, q)`: the
/// non-positive branch for `x < 0`, the non-negative branch otherwise.
pub fn evaluate(family: BernoulliFamily, spec: &EvalSpec) -> Result<Rational> {
    if spec.x < 0 {
        eval_prop1(family, spec)
    } else {
        eval_prop2(family, spec)
    }
}

/// Closed-form evaluation with automatic parameter choice.
///
/// Non-positive integer orders whose argument sign matches the
/// [`special_neg_order`] identities use it directly. Everything else goes
/// through [`evaluate`] with `p = n`, retrying with `q + 1` while a sampled
/// denominator vanishes.
pub fn evaluate_auto(family: BernoulliFamily, n: usize, alpha: &Rational, x: i64) -> Rational {
    if alpha.is_integer() && !alpha.is_positive() {
        let k: usize = (-alpha.to_integer())
            .try_into()
            .expect("order fits in usize");
        match family {
            BernoulliFamily::FirstKind if x >= 0 => {
                return special_neg_order(family, n, k, x.unsigned_abs() as usize)
            }
            BernoulliFamily::SecondKind if x <= 0 => {
                return special_neg_order(family, n, k, x.unsigned_abs() as usize)
            }
            _ => {}
        }
    }
    let mut spec = EvalSpec::new(n, alpha.clone(), x);
    loop {
        match evaluate(family, &spec) {
            Ok(v) => return v,
            Err(Error::PoleAtSampledPoint { .. }) => spec.q += 1,
            Err(e) => unreachable!("p = n is always admissible: {e}"),
        }
    }
}

/// `x` as the non-negative `r` of `x = r`, or an error for negative `x`.
pub(crate) fn natural_arg(x: i64, what: &str) -> Result<usize> {
    if x < 0 {
        return Err(Error::InvalidParameters(format!("{what} needs x >= 0, got {x}")));
    }
    Ok(x as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use BernoulliFamily::{FirstKind as B, SecondKind as Sb};

    #[test]
    fn oracle_documented_values() {
        assert_eq!(oracle_eval(B, 2, &int(1), 0), ratio(1, 6));
        assert_eq!(oracle_eval(B, 1, &int(1), 0), ratio(-1, 2));
        assert_eq!(oracle_eval(Sb, 1, &int(1), 0), ratio(1, 2));
        assert_eq!(oracle_eval(Sb, 2, &int(1), 0), ratio(-1, 6));
        assert_eq!(oracle_eval(B, 12, &int(1), 0), ratio(-691, 2730));
        for family in BernoulliFamily::ALL {
            assert_eq!(oracle_eval(family, 0, &ratio(7, 3), 5), int(1));
        }
    }

    #[test]
    fn oracle_at_order_zero_collapses() {
        for x in -3..=3i64 {
            for n in 0..6usize {
                let xr = int(x);
                assert_eq!(oracle_eval(B, n, &int(0), x), arith::pow_rat(&xr, n));
                assert_eq!(oracle_eval(Sb, n, &int(0), x), falling(&xr, n));
            }
        }
    }

    #[test]
    fn special_values_documented() {
        assert_eq!(special_neg_order(B, 0, 3, 2), int(1));
        assert_eq!(special_neg_order(B, 1, 1, 0), ratio(1, 2));
        assert_eq!(oracle_eval(B, 1, &int(-1), 0), ratio(1, 2));
        assert_eq!(special_neg_order(Sb, 1, 1, 0), ratio(-1, 2));
        assert_eq!(oracle_eval(Sb, 1, &int(-1), 0), ratio(-1, 2));
    }

    #[test]
    fn evaluate_dispatches_on_sign() {
        for family in BernoulliFamily::ALL {
            for x in -2..=2 {
                let spec = EvalSpec::new(3, ratio(1, 2), x);
                assert_eq!(evaluate(family, &spec).unwrap(), oracle_eval(family, 3, &ratio(1, 2), x));
            }
        }
    }

    #[test]
    fn evaluate_auto_covers_poles_and_negative_orders() {
        for family in BernoulliFamily::ALL {
            for alpha in [int(-3), int(-1), int(0), int(1), ratio(-5, 2)] {
                for x in -2..=2 {
                    for n in 0..5 {
                        assert_eq!(
                            evaluate_auto(family, n, &alpha, x),
                            oracle_eval(family, n, &alpha, x),
                            "{family} n={n} alpha={alpha} x={x}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn spec_requires_p_at_least_n() {
        let spec = EvalSpec::new(3, int(1), 0).with_p(2);
        assert!(matches!(spec.validate(), Err(Error::InvalidParameters(_))));
    }
}
