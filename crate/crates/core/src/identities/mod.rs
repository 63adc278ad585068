//! Grid sweeps of the binomial / r-Stirling identities and the special
//! value identities they are built from.
//!
//! Every check compares two exact rationals per grid point and collects a
//! deterministic [`IdentityReport`]: points are evaluated in parallel, then
//! sorted before the report is assembled.
//!
//! Two printed identities differ from what the sweeps confirm by a factor
//! `(-1)^n`: the first display of the cycle/partition binomial identity
//! (`c1-first`, and its `r = 1` and `k = 0` specialisations) and the first
//! display of the shifted identity (`c5-first`). For these ids a
//! [`SignConvention`] selects the printed form ([`SignConvention::Paper`])
//! or the form that holds ([`SignConvention::Corrected`], the default).

mod formulas;
mod grid;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::output::rational;
use crate::rstirling::{StirlingCache, StirlingKind};

pub use grid::{default_alphas, Grid, Point};
use grid::Axes;

/// At most this many counterexamples are kept per report, smallest first.
pub const MAX_RECORDED_FAILURES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "c1-first")]
    C1First,
    #[serde(rename = "c1-second")]
    C1Second,
    #[serde(rename = "c1-ex-r1-first")]
    C1ExR1First,
    #[serde(rename = "c1-ex-r1-second")]
    C1ExR1Second,
    #[serde(rename = "c1-ex-k0-first")]
    C1ExK0First,
    #[serde(rename = "c1-ex-k0-second")]
    C1ExK0Second,
    #[serde(rename = "c1-ex-n0")]
    C1ExN0,
    #[serde(rename = "c5-first")]
    C5First,
    #[serde(rename = "c5-second")]
    C5Second,
    #[serde(rename = "c5-ex-k0-first")]
    C5ExK0First,
    #[serde(rename = "c5-ex-k0-second")]
    C5ExK0Second,
    #[serde(rename = "c5-ex-n0")]
    C5ExN0,
    #[serde(rename = "a5")]
    A5,
    #[serde(rename = "a6")]
    A6,
    #[serde(rename = "carlitz")]
    Carlitz,
    #[serde(rename = "remark2")]
    Remark2,
}

impl IdentityId {
    pub const ALL: [IdentityId; 16] = [
        IdentityId::C1First,
        IdentityId::C1Second,
        IdentityId::C1ExR1First,
        IdentityId::C1ExR1Second,
        IdentityId::C1ExK0First,
        IdentityId::C1ExK0Second,
        IdentityId::C1ExN0,
        IdentityId::C5First,
        IdentityId::C5Second,
        IdentityId::C5ExK0First,
        IdentityId::C5ExK0Second,
        IdentityId::C5ExN0,
        IdentityId::A5,
        IdentityId::A6,
        IdentityId::Carlitz,
        IdentityId::Remark2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::C1First => "c1-first",
            IdentityId::C1Second => "c1-second",
            IdentityId::C1ExR1First => "c1-ex-r1-first",
            IdentityId::C1ExR1Second => "c1-ex-r1-second",
            IdentityId::C1ExK0First => "c1-ex-k0-first",
            IdentityId::C1ExK0Second => "c1-ex-k0-second",
            IdentityId::C1ExN0 => "c1-ex-n0",
            IdentityId::C5First => "c5-first",
            IdentityId::C5Second => "c5-second",
            IdentityId::C5ExK0First => "c5-ex-k0-first",
            IdentityId::C5ExK0Second => "c5-ex-k0-second",
            IdentityId::C5ExN0 => "c5-ex-n0",
            IdentityId::A5 => "a5",
            IdentityId::A6 => "a6",
            IdentityId::Carlitz => "carlitz",
            IdentityId::Remark2 => "remark2",
        }
    }

    /// Whether the printed and corrected forms of this identity differ.
    pub fn sign_sensitive(self) -> bool {
        matches!(
            self,
            IdentityId::C1First
                | IdentityId::C1ExR1First
                | IdentityId::C1ExK0First
                | IdentityId::C5First
        )
    }

    pub(crate) fn axes(self) -> Axes {
        use IdentityId::*;
        let all = Axes { n: true, k: true, r: true, p: true, q: true, alpha: false };
        match self {
            C1First | C1Second | C5First | C5Second => all,
            C1ExR1First | C1ExR1Second => Axes { r: false, ..all },
            C1ExK0First | C1ExK0Second | C5ExK0First | C5ExK0Second => Axes { k: false, ..all },
            C1ExN0 | C5ExN0 => Axes { n: false, r: false, ..all },
            A5 | A6 => Axes { n: true, k: true, r: true, ..Axes::default() },
            Remark2 => Axes { n: true, r: true, ..Axes::default() },
            Carlitz => Axes { n: true, alpha: true, ..Axes::default() },
        }
    }

    /// Parameters pinned by the identity itself.
    pub(crate) fn fixed(self) -> &'static [(&'static str, usize)] {
        use IdentityId::*;
        match self {
            C1ExR1First | C1ExR1Second => &[("r", 1)],
            C1ExK0First | C1ExK0Second | C5ExK0First | C5ExK0Second => &[("k", 0)],
            C1ExN0 | C5ExN0 => &[("n", 0)],
            _ => &[],
        }
    }

    fn evaluate(self, point: &Point, sign: SignConvention) -> (Rational, Rational) {
        use IdentityId::*;
        let mut pt = point.clone();
        // pinned parameters are read through the same accessors
        for &(name, value) in self.fixed() {
            match name {
                "r" => pt.r = Some(value),
                "k" => pt.k = Some(value),
                "n" => pt.n = Some(value),
                other => unreachable!("no axis named {other}"),
            }
        }
        match self {
            C1First => formulas::c1_first(&pt, sign),
            C1Second => formulas::c1_second(&pt),
            C1ExR1First => formulas::c1_ex_r1_first(&pt, sign),
            C1ExR1Second => formulas::c1_ex_r1_second(&pt),
            C1ExK0First => formulas::c1_ex_k0_first(&pt, sign),
            C1ExK0Second => formulas::c1_ex_k0_second(&pt),
            C1ExN0 => formulas::c1_ex_n0(&pt),
            C5First => formulas::c5_first(&pt, sign),
            C5Second => formulas::c5_second(&pt),
            C5ExK0First => formulas::c5_ex_k0_first(&pt),
            C5ExK0Second => formulas::c5_ex_k0_second(&pt),
            C5ExN0 => formulas::c5_ex_n0(&pt),
            A5 => formulas::a5(&pt),
            A6 => formulas::a6(&pt),
            Carlitz => formulas::carlitz(&pt),
            Remark2 => formulas::remark2(&pt),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    /// The sign exactly as printed.
    Paper,
    /// The printed form with its spurious `(-1)^n` removed or supplied.
    #[default]
    Corrected,
}

impl FromStr for SignConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "paper" => Ok(SignConvention::Paper),
            "corrected" => Ok(SignConvention::Corrected),
            _ => Err(format!("unknown sign convention {s:?} (expected paper or corrected)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub point: Point,
    #[serde(with = "rational")]
    pub lhs: Rational,
    #[serde(with = "rational")]
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    /// Present only for identities whose printed sign is in question.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<SignConvention>,
    pub grid: BTreeMap<String, String>,
    /// Number of grid points evaluated.
    pub checked: usize,
    /// Number of grid points where the two sides differ.
    pub failed: usize,
    /// The first [`MAX_RECORDED_FAILURES`] failing points in lexicographic
    /// order.
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub fn verified(&self) -> bool {
        self.failed == 0
    }
}

/// Evaluates both sides of `id` at every point of `grid`.
///
/// Results come back in point order regardless of scheduling.
pub fn evaluate_points(
    id: IdentityId,
    sign: SignConvention,
    grid: &Grid,
) -> Vec<(Point, Rational, Rational)> {
    warm_tables(grid);
    let points = grid.points(id);
    let mut rows: Vec<(Point, Rational, Rational)> = points
        .into_par_iter()
        .map(|pt| {
            let (lhs, rhs) = id.evaluate(&pt, sign);
            (pt, lhs, rhs)
        })
        .collect();
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    rows
}

/// Sweeps `id` over `grid` and reports every point where the sides differ.
pub fn verify(id: IdentityId, sign: SignConvention, grid: &Grid) -> IdentityReport {
    let rows = evaluate_points(id, sign, grid);
    let checked = rows.len();
    let mut failures: Vec<Failure> = rows
        .into_iter()
        .filter(|(_, lhs, rhs)| lhs != rhs)
        .map(|(point, lhs, rhs)| Failure { point, lhs, rhs })
        .collect();
    let failed = failures.len();
    failures.truncate(MAX_RECORDED_FAILURES);
    IdentityReport {
        id,
        sign: id.sign_sensitive().then_some(sign),
        grid: grid.describe(id),
        checked,
        failed,
        failures,
    }
}

/// Which display of a two-display identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Display {
    /// The display built on r-Stirling numbers of the first kind.
    First,
    /// The display built on r-Stirling numbers of the second kind.
    Second,
}

/// Specialisations of the cycle/partition binomial identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C1Example {
    R1(Display),
    K0(Display),
    N0,
}

/// Specialisations of the shifted identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C5Example {
    K0(Display),
    N0,
}

/// The identities built directly on the Bernoulli module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasicIdentity {
    A5,
    A6,
    Carlitz,
    Remark2,
}

pub fn check_c1(display: Display, sign: SignConvention, grid: &Grid) -> IdentityReport {
    match display {
        Display::First => verify(IdentityId::C1First, sign, grid),
        Display::Second => verify(IdentityId::C1Second, sign, grid),
    }
}

pub fn check_c1_examples(which: C1Example, sign: SignConvention, grid: &Grid) -> IdentityReport {
    let id = match which {
        C1Example::R1(Display::First) => IdentityId::C1ExR1First,
        C1Example::R1(Display::Second) => IdentityId::C1ExR1Second,
        C1Example::K0(Display::First) => IdentityId::C1ExK0First,
        C1Example::K0(Display::Second) => IdentityId::C1ExK0Second,
        C1Example::N0 => IdentityId::C1ExN0,
    };
    verify(id, sign, grid)
}

pub fn check_c5(display: Display, sign: SignConvention, grid: &Grid) -> IdentityReport {
    match display {
        Display::First => verify(IdentityId::C5First, sign, grid),
        Display::Second => verify(IdentityId::C5Second, sign, grid),
    }
}

pub fn check_c5_examples(which: C5Example, grid: &Grid) -> IdentityReport {
    let id = match which {
        C5Example::K0(Display::First) => IdentityId::C5ExK0First,
        C5Example::K0(Display::Second) => IdentityId::C5ExK0Second,
        C5Example::N0 => IdentityId::C5ExN0,
    };
    verify(id, SignConvention::Corrected, grid)
}

pub fn check_basic(which: BasicIdentity, grid: &Grid) -> IdentityReport {
    let id = match which {
        BasicIdentity::A5 => IdentityId::A5,
        BasicIdentity::A6 => IdentityId::A6,
        BasicIdentity::Carlitz => IdentityId::Carlitz,
        BasicIdentity::Remark2 => IdentityId::Remark2,
    };
    verify(id, SignConvention::Corrected, grid)
}

/// Builds every table a sweep over `grid` can touch before going parallel.
fn warm_tables(grid: &Grid) {
    let max_p = grid.max_n + grid.p_offsets.iter().copied().max().unwrap_or(0);
    let reach = grid.max_n + grid.max_r + grid.max_q + grid.max_k + max_p + 2;
    let cache = StirlingCache::global();
    for kind in StirlingKind::ALL {
        for r in 0..=grid.max_r + 1 {
            cache.table(kind, r, reach);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn pt(n: usize, k: usize, r: usize, p: usize, q: usize) -> Point {
        Point { n: Some(n), k: Some(k), r: Some(r), p: Some(p), q: Some(q), ..Point::default() }
    }

    #[test]
    fn ids_round_trip_through_strings() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>(), Ok(id));
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
        assert!("c7".parse::<IdentityId>().is_err());
    }

    #[test]
    fn c1_first_hand_expansion() {
        let (lhs, rhs) = IdentityId::C1First.evaluate(&pt(1, 0, 1, 1, 0), SignConvention::Paper);
        assert_eq!((lhs, rhs), (int(0), int(0)));
    }

    #[test]
    fn c5_first_hand_expansion() {
        let p = pt(1, 0, 1, 1, 0);
        let (lhs, rhs) = IdentityId::C5First.evaluate(&p, SignConvention::Corrected);
        assert_eq!((lhs, rhs), (int(3), int(3)));
        let (lhs, rhs) = IdentityId::C5First.evaluate(&p, SignConvention::Paper);
        assert_eq!((lhs, rhs), (int(3), int(-3)));
        let (lhs, rhs) = IdentityId::C5Second.evaluate(&p, SignConvention::Corrected);
        assert_eq!((lhs, rhs), (int(3), int(3)));
    }

    #[test]
    fn k0_example_hand_expansions() {
        let p = Point { n: Some(1), r: Some(1), p: Some(1), q: Some(0), ..Point::default() };
        assert_eq!(IdentityId::C5ExK0First.evaluate(&p, SignConvention::Corrected), (int(3), int(3)));
        for n in 1..4 {
            let p = Point { n: Some(n), r: Some(0), p: Some(n), q: Some(1), ..Point::default() };
            assert_eq!(IdentityId::C5ExK0Second.evaluate(&p, SignConvention::Corrected).1, int(0));
            let p = Point { r: Some(1), ..p };
            assert_eq!(IdentityId::C1ExK0Second.evaluate(&p, SignConvention::Corrected).1, int(0));
        }
    }

    #[test]
    fn n0_examples_hand_expansions() {
        let p = Point { k: Some(1), p: Some(2), q: Some(1), ..Point::default() };
        assert_eq!(IdentityId::C1ExN0.evaluate(&p, SignConvention::Corrected), (int(2), int(2)));
        let p = Point { k: Some(1), p: Some(2), q: Some(0), ..Point::default() };
        assert_eq!(IdentityId::C5ExN0.evaluate(&p, SignConvention::Corrected), (int(4), int(4)));
    }

    #[test]
    fn small_grid_reports() {
        let grid = Grid { max_n: 3, max_k: 2, max_r: 2, max_q: 1, ..Grid::desk() };
        for id in IdentityId::ALL {
            let report = verify(id, SignConvention::Corrected, &grid);
            assert!(report.verified(), "{id}: {:?}", report.failures.first());
            assert_eq!(report.checked, grid.points(id).len());
        }
    }

    #[test]
    fn report_caps_recorded_failures() {
        let report = verify(IdentityId::C5First, SignConvention::Paper, &Grid::desk());
        assert!(report.failed > MAX_RECORDED_FAILURES);
        assert_eq!(report.failures.len(), MAX_RECORDED_FAILURES);
        assert!(report.failures.windows(2).all(|w| w[0].point < w[1].point));
    }
}
