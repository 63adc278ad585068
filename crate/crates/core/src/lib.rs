//! Exact evaluation of r-Stirling numbers and higher-order Bernoulli
//! polynomials of both kinds at integer arguments.
//!
//! Every quantity is an exact [`Rational`]. Values are available through
//! three independent routes:
//!
//! * recurrence tables ([`rstirling`]),
//! * coefficient extraction from truncated power series ([`series`]),
//! * finite closed forms built on Melzak's interpolation formula
//!   ([`bernoulli`]).
//!
//! The [`identities`] module sweeps the binomial/r-Stirling identities that
//! follow from the closed forms over parameter grids and records exact
//! counterexamples.

pub mod arith;
pub mod bernoulli;
mod error;
pub mod identities;
pub mod output;
pub mod rstirling;
pub mod series;

pub use arith::Rational;
pub use bernoulli::{BernoulliFamily, EvalSpec};
pub use error::{Error, Result};
pub use identities::{Grid, IdentityId, IdentityReport, SignConvention};
pub use rstirling::{rstir, StirlingKind, StirlingTable};
pub use series::Series;
