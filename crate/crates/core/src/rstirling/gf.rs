//! Generating-function oracle for r-Stirling numbers.
//!
//! With the `+r` offset applied here and nowhere else:
//!
//! ```text
//! sum_n [n+r, k+r]_r t^n/n! = (1/k!) (-ln(1-t))^k (1-t)^(-r)
//! sum_n {n+r, k+r}_r t^n/n! = (1/k!) (exp(t)-1)^k exp(rt)
//! ```

use num_bigint::BigUint;

use super::StirlingKind;
use crate::arith::{self, Rational};
use crate::series::Series;
use crate::{Error, Result};

/// Returns `[n+r, k+r]_r` (resp. `{n+r, k+r}_r`) as `n! [t^n]` of the
/// generating function above.
pub fn rstir_gf_oracle(kind: StirlingKind, n: usize, k: usize, r: usize) -> Result<BigUint> {
    let order = n + 1;
    let (base, weight) = match kind {
        StirlingKind::FirstKindUnsigned => {
            let one_minus_t = Series::from_ints(&[1, -1], order);
            let neg_log = -&one_minus_t.log()?;
            let weight = one_minus_t.pow(&arith::int(-(r as i64)))?;
            (neg_log, weight)
        }
        StirlingKind::SecondKind => {
            let expm1 = &Series::exp_linear(&arith::int(1), order) - &Series::one(order);
            (expm1, Series::exp_linear(&arith::int(r as i64), order))
        }
    };
    let mut product = weight;
    for _ in 0..k {
        product = &product * &base;
    }
    let k_factorial = Rational::from_integer(arith::factorial(k));
    let value = product.egf_coeff(n)? / k_factorial;
    arith::as_natural(&value).ok_or_else(|| Error::NonIntegerCoefficient {
        value: arith::format_rational(&value),
    })
}
