//! Both sides of every swept identity, transcribed display by display.
//! Each function returns `(lhs, rhs)` for one grid point.

use num_traits::Zero;

use super::{Point, SignConvention};
use crate::arith::{self, binomial_rat as c, sign_pow, Rational};
use crate::bernoulli::{
    bernoulli_first_via_partitions, falling, oracle_eval, rising, special_neg_order,
    BernoulliFamily,
};
use crate::rstirling::{rstir_rat, StirlingKind};

const CYCLES: StirlingKind = StirlingKind::FirstKindUnsigned;
const BLOCKS: StirlingKind = StirlingKind::SecondKind;

fn ordinary(kind: StirlingKind, n: usize, k: usize) -> Rational {
    rstir_rat(kind, n, k, 0)
}

fn sum_to(p: usize, term: impl Fn(usize) -> Rational) -> Rational {
    (0..=p).fold(Rational::zero(), |acc, j| acc + term(j))
}

/// Integer `r - 1` for possibly-zero `r`.
fn r_minus_one(r: usize) -> Rational {
    arith::int(r as i64 - 1)
}

/// `(-1)^n` when the convention asks for it, else 1.
fn correction(apply: bool, n: usize) -> Rational {
    if apply {
        sign_pow(n)
    } else {
        arith::int(1)
    }
}

/// Shared LHS of the two C1 displays:
/// `sum_j (-1)^j C(j+q,q) C(n+k+q+j,k) C(n+k+p+q+1,p-j) S(n+r+j+q, r+j+q)_r`.
fn c1_lhs(pt: &Point, kind: StirlingKind) -> Rational {
    let (n, k, r, p, q) = (pt.n(), pt.k(), pt.r(), pt.p(), pt.q());
    sum_to(p, |j| {
        sign_pow(j)
            * c(j + q, q)
            * c(n + k + q + j, k)
            * c(n + k + p + q + 1, p - j)
            * rstir_rat(kind, n + r + j + q, r + j + q, r)
    })
}

/// Printed RHS: `C(n+k+q,q) sum_j (-1)^(n-j) C(n+k,j+k) {j+k,k} (r-1)^(n-j)`.
/// The corrected convention multiplies it by `(-1)^n`.
pub(super) fn c1_first(pt: &Point, sign: SignConvention) -> (Rational, Rational) {
    let (n, k, r, q) = (pt.n(), pt.k(), pt.r(), pt.q());
    let base = r_minus_one(r);
    let rhs = c(n + k + q, q)
        * sum_to(n, |j| {
            sign_pow(n - j)
                * c(n + k, j + k)
                * ordinary(BLOCKS, j + k, k)
                * arith::pow_rat(&base, n - j)
        });
    (c1_lhs(pt, CYCLES), rhs * correction(sign == SignConvention::Corrected, n))
}

/// `C(n+k+q,q) sum_j (-1)^j C(n+k,j+k) [j+k,k] (r-1)_(n-j)`.
pub(super) fn c1_second(pt: &Point) -> (Rational, Rational) {
    let (n, k, r, q) = (pt.n(), pt.k(), pt.r(), pt.q());
    let base = r_minus_one(r);
    let rhs = c(n + k + q, q)
        * sum_to(n, |j| {
            sign_pow(j) * c(n + k, j + k) * ordinary(CYCLES, j + k, k) * falling(&base, n - j)
        });
    (c1_lhs(pt, BLOCKS), rhs)
}

/// `r = 1`: `sum_j (-1)^j C(j+q,q) C(n+k+q+j,k) C(n+k+p+q+1,p-j) [j+n+q+1, j+q+1]`
/// against printed `C(n+k+q,q) {n+k,k}`.
pub(super) fn c1_ex_r1_first(pt: &Point, sign: SignConvention) -> (Rational, Rational) {
    let (n, k, p, q) = (pt.n(), pt.k(), pt.p(), pt.q());
    let lhs = sum_to(p, |j| {
        sign_pow(j)
            * c(j + q, q)
            * c(n + k + q + j, k)
            * c(n + k + p + q + 1, p - j)
            * ordinary(CYCLES, j + n + q + 1, j + q + 1)
    });
    let rhs = c(n + k + q, q) * ordinary(BLOCKS, n + k, k);
    (lhs, rhs * correction(sign == SignConvention::Corrected, n))
}

/// `r = 1`: `sum_j (-1)^(n-j) ... {j+n+q+1, j+q+1} = C(n+k+q,q) [n+k,k]`.
pub(super) fn c1_ex_r1_second(pt: &Point) -> (Rational, Rational) {
    let (n, k, p, q) = (pt.n(), pt.k(), pt.p(), pt.q());
    let lhs = sum_to(p, |j| {
        sign_pow(n + j)
            * c(j + q, q)
            * c(n + k + q + j, k)
            * c(n + k + p + q + 1, p - j)
            * ordinary(BLOCKS, j + n + q + 1, j + q + 1)
    });
    (lhs, c(n + k + q, q) * ordinary(CYCLES, n + k, k))
}

/// `k = 0`: `sum_j (-1)^(n-j) C(j+q,q) C(n+p+q+1,p-j) [n+r+j+q, r+j+q]_r`
/// against printed `C(n+q,q) (r-1)^n`.
pub(super) fn c1_ex_k0_first(pt: &Point, sign: SignConvention) -> (Rational, Rational) {
    let (n, r, p, q) = (pt.n(), pt.r(), pt.p(), pt.q());
    let lhs = sum_to(p, |j| {
        sign_pow(n + j)
            * c(j + q, q)
            * c(n + p + q + 1, p - j)
            * rstir_rat(CYCLES, n + r + j + q, r + j + q, r)
    });
    let rhs = c(n + q, q) * arith::pow_rat(&r_minus_one(r), n);
    (lhs, rhs * correction(sign == SignConvention::Corrected, n))
}

/// `k = 0`: `sum_j (-1)^j C(j+q,q) C(n+p+q+1,p-j) {n+r+j+q, r+j+q}_r = C(n+q,q) (r-1)_n`.
pub(super) fn c1_ex_k0_second(pt: &Point) -> (Rational, Rational) {
    let (n, r, p, q) = (pt.n(), pt.r(), pt.p(), pt.q());
    let lhs = sum_to(p, |j| {
        sign_pow(j)
            * c(j + q, q)
            * c(n + p + q + 1, p - j)
            * rstir_rat(BLOCKS, n + r + j + q, r + j + q, r)
    });
    (lhs, c(n + q, q) * falling(&r_minus_one(r), n))
}

/// `n = 0`: `sum_j (-1)^j C(j+q,q) C(k+q+j,k) C(k+q+p+1,p-j) = C(k+q,q)`.
pub(super) fn c1_ex_n0(pt: &Point) -> (Rational, Rational) {
    let (k, p, q) = (pt.k(), pt.p(), pt.q());
    let lhs = sum_to(p, |j| {
        sign_pow(j) * c(j + q, q) * c(k + q + j, k) * c(k + q + p + 1, p - j)
    });
    (lhs, c(k + q, q))
}

fn c5_lhs(pt: &Point, kind: StirlingKind) -> Rational {
    let (n, k, r, p, q) = (pt.n(), pt.k(), pt.r(), pt.p(), pt.q());
    sum_to(p, |j| {
        sign_pow(j)
            * c(n + p + q + k + 1, p - j)
            * c(q + j, j)
            * c(q + k + 1 + j, k)
            * rstir_rat(kind, n + r + q + k + 1 + j, r + q + k + 1 + j, r)
    })
}

/// RHS `C(n+p+q+k+1, n+k) [n+k+r, k+r]_r`, times the printed `(-1)^n` under
/// `SignConvention::Paper`.
pub(super) fn c5_first(pt: &Point, sign: SignConvention) -> (Rational, Rational) {
    let (n, k, r, p, q) = (pt.n(), pt.k(), pt.r(), pt.p(), pt.q());
    let rhs = c(n + p + q + k + 1, n + k) * rstir_rat(CYCLES, n + k + r, k + r, r);
    (c5_lhs(pt, CYCLES), rhs * correction(sign == SignConvention::Paper, n))
}

pub(super) fn c5_second(pt: &Point) -> (Rational, Rational) {
    let (n, k, r, p, q) = (pt.n(), pt.k(), pt.r(), pt.p(), pt.q());
    let rhs = c(n + p + q + k + 1, n + k) * rstir_rat(BLOCKS, n + k + r, k + r, r);
    (c5_lhs(pt, BLOCKS), rhs)
}

fn c5_k0_lhs(pt: &Point, kind: StirlingKind) -> Rational {
    let (n, r, p, q) = (pt.n(), pt.r(), pt.p(), pt.q());
    sum_to(p, |j| {
        sign_pow(j)
            * c(n + p + q + 1, p - j)
            * c(q + j, j)
            * rstir_rat(kind, n + r + q + 1 + j, r + q + 1 + j, r)
    })
}

/// `k = 0`: `... [n+r+q+1+j, r+q+1+j]_r = C(n+p+q+1, n) r^(rising n)`.
pub(super) fn c5_ex_k0_first(pt: &Point) -> (Rational, Rational) {
    let (n, r, p, q) = (pt.n(), pt.r(), pt.p(), pt.q());
    let rhs = c(n + p + q + 1, n) * rising(&arith::int(r as i64), n);
    (c5_k0_lhs(pt, CYCLES), rhs)
}

/// `k = 0`: `... {n+r+q+1+j, r+q+1+j}_r = C(n+p+q+1, n) r^n`.
pub(super) fn c5_ex_k0_second(pt: &Point) -> (Rational, Rational) {
    let (n, r, p, q) = (pt.n(), pt.r(), pt.p(), pt.q());
    let rhs = c(n + p + q + 1, n) * arith::pow_rat(&arith::int(r as i64), n);
    (c5_k0_lhs(pt, BLOCKS), rhs)
}

/// `n = 0`: `sum_j (-1)^j C(p+q+k+1,p-j) C(q+j,q) C(q+k+1+j,k) = C(p+q+k+1,k)`.
pub(super) fn c5_ex_n0(pt: &Point) -> (Rational, Rational) {
    let (k, p, q) = (pt.k(), pt.p(), pt.q());
    let lhs = sum_to(p, |j| {
        sign_pow(j) * c(p + q + k + 1, p - j) * c(q + j, q) * c(q + k + 1 + j, k)
    });
    (lhs, c(p + q + k + 1, k))
}

/// `B_n^(-k)(r)` from Stirling numbers against the series oracle.
pub(super) fn a5(pt: &Point) -> (Rational, Rational) {
    let (n, k, r) = (pt.n(), pt.k(), pt.r());
    let fam = BernoulliFamily::FirstKind;
    (special_neg_order(fam, n, k, r), oracle_eval(fam, n, &arith::int(-(k as i64)), r as i64))
}

/// `b_n^(-k)(-r)` from Stirling numbers against the series oracle.
pub(super) fn a6(pt: &Point) -> (Rational, Rational) {
    let (n, k, r) = (pt.n(), pt.k(), pt.r());
    let fam = BernoulliFamily::SecondKind;
    (special_neg_order(fam, n, k, r), oracle_eval(fam, n, &arith::int(-(k as i64)), -(r as i64)))
}

/// `B_n^(a)(x) = b_n^(n+1-a)(x-1)`, both sides from the series oracle.
pub(super) fn carlitz(pt: &Point) -> (Rational, Rational) {
    let n = pt.n();
    let alpha = pt.alpha.clone().expect("Carlitz points carry alpha");
    let x = pt.x.expect("Carlitz points carry x");
    let dual = arith::int(n as i64 + 1) - &alpha;
    (
        oracle_eval(BernoulliFamily::FirstKind, n, &alpha, x),
        oracle_eval(BernoulliFamily::SecondKind, n, &dual, x - 1),
    )
}

/// `B_n(r) = sum_j (-1)^j j!/(j+1) {n+r, j+r}_r` against the series oracle.
pub(super) fn remark2(pt: &Point) -> (Rational, Rational) {
    let (n, r) = (pt.n(), pt.r());
    (
        bernoulli_first_via_partitions(n, r),
        oracle_eval(BernoulliFamily::FirstKind, n, &arith::int(1), r as i64),
    )
}
