//! Falling/rising factorials, rational binomials and Melzak's formula.

use num_traits::{One, Zero};

use crate::arith::{self, Rational};
use crate::{Error, Result};

/// `x (x-1) ... (x-k+1) / k!`, with `binom_rat(x, 0) = 1`.
pub fn binom_rat(x: &Rational, k: usize) -> Rational {
    falling(x, k) / arith::from_big(arith::factorial(k))
}

/// `x (x-1) ... (x-n+1)`; the empty product is 1.
pub fn falling(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (x - arith::int(i as i64)))
}

/// `x (x+1) ... (x+n-1)`; the empty product is 1.
pub fn rising(x: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (x + arith::int(i as i64)))
}

/// Melzak's interpolation formula, shifted by `q`.
///
/// Given `values[j] = f(-j-q)` for `j = 0..=p` of a polynomial `f` of
/// degree at most `p`, returns
///
/// ```text
/// f(alpha) = (alpha+q) C(alpha+q+p, p) sum_j (-1)^j C(p, j) f(-j-q) / (alpha+q+j)
/// ```
///
/// Fails with [`Error::PoleAtSampledPoint`] when some `alpha + q + j` is
/// zero.
pub fn melzak_eval(values: &[Rational], alpha: &Rational, q: usize) -> Result<Rational> {
    let Some(p) = values.len().checked_sub(1) else {
        return Err(Error::InvalidParameters("Melzak evaluation needs at least one sample".into()));
    };
    let shifted = alpha + arith::int(q as i64);
    let mut sum = Rational::zero();
    for (j, value) in values.iter().enumerate() {
        let denominator = &shifted + arith::int(j as i64);
        if denominator.is_zero() {
            return Err(Error::PoleAtSampledPoint {
                j,
                denominator: arith::format_rational(&shifted),
            });
        }
        if value.is_zero() {
            continue;
        }
        sum += arith::sign_pow(j) * arith::binomial_rat(p, j) * value / denominator;
    }
    let prefactor = &shifted * binom_rat(&(&shifted + arith::int(p as i64)), p);
    Ok(prefactor * sum)
}
