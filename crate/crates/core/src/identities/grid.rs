use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::IdentityId;
use crate::arith::{self, Rational};
use crate::output::opt_rational;

/// Parameter ranges for a sweep. Each identity only walks the axes it
/// depends on; fixed parameters (e.g. `r = 1` in the `r1` examples) are
/// set by the identity, not the grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub max_n: usize,
    pub max_k: usize,
    pub max_r: usize,
    pub max_q: usize,
    /// `p` ranges over `n + offset`.
    pub p_offsets: Vec<usize>,
    /// Orders swept by the Carlitz check.
    pub alphas: Vec<Rational>,
}

impl Grid {
    /// `n <= 8, k <= 4, r <= 3, q <= 3, p in {n, n+2}`.
    pub fn desk() -> Grid {
        Grid {
            max_n: 8,
            max_k: 4,
            max_r: 3,
            max_q: 3,
            p_offsets: vec![0, 2],
            alphas: default_alphas(),
        }
    }

    /// The desk grid, widened where an identity is cheap enough to check
    /// further: `n, k, r <= 8` for the special values and the Stirling sum
    /// of `B_n(r)`, `n <= 10` for the Carlitz duality.
    pub fn default_for(id: IdentityId) -> Grid {
        let desk = Grid::desk();
        match id {
            IdentityId::A5 | IdentityId::A6 => Grid { max_k: 8, max_r: 8, ..desk },
            IdentityId::Remark2 => Grid { max_r: 8, ..desk },
            IdentityId::Carlitz => Grid { max_n: 10, ..desk },
            _ => desk,
        }
    }

    /// Every point of the sweep for `id`, in lexicographic order.
    pub fn points(&self, id: IdentityId) -> Vec<Point> {
        let axes = id.axes();
        let ns: Vec<usize> = if axes.n { (0..=self.max_n).collect() } else { vec![0] };
        let ks: Vec<usize> = if axes.k { (0..=self.max_k).collect() } else { vec![0] };
        let rs: Vec<usize> = if axes.r { (0..=self.max_r).collect() } else { vec![0] };
        let qs: Vec<usize> = if axes.q { (0..=self.max_q).collect() } else { vec![0] };
        let mut offsets = self.p_offsets.clone();
        offsets.sort_unstable();
        offsets.dedup();

        let mut out = Vec::new();
        for &n in &ns {
            if axes.alpha {
                for alpha in &self.alphas {
                    for x in -(self.max_r as i64)..=self.max_r as i64 {
                        out.push(Point {
                            n: Some(n),
                            alpha: Some(alpha.clone()),
                            x: Some(x),
                            ..Point::default()
                        });
                    }
                }
                continue;
            }
            for &k in &ks {
                for &r in &rs {
                    let ps: Vec<Option<usize>> = if axes.p {
                        offsets.iter().map(|o| Some(n + o)).collect()
                    } else {
                        vec![None]
                    };
                    for &p in &ps {
                        for &q in &qs {
                            out.push(Point {
                                n: axes.n.then_some(n),
                                k: axes.k.then_some(k),
                                r: axes.r.then_some(r),
                                p,
                                q: axes.q.then_some(q),
                                ..Point::default()
                            });
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Human-readable ranges of the axes `id` sweeps.
    pub fn describe(&self, id: IdentityId) -> BTreeMap<String, String> {
        let axes = id.axes();
        let mut d = BTreeMap::new();
        if axes.n {
            d.insert("n".into(), format!("0..={}", self.max_n));
        }
        if axes.k {
            d.insert("k".into(), format!("0..={}", self.max_k));
        }
        if axes.r {
            d.insert("r".into(), format!("0..={}", self.max_r));
        }
        if axes.q {
            d.insert("q".into(), format!("0..={}", self.max_q));
        }
        if axes.p {
            let offsets: Vec<String> = self.p_offsets.iter().map(|o| format!("n+{o}")).collect();
            d.insert("p".into(), format!("{{{}}}", offsets.join(",")));
        }
        if axes.alpha {
            let alphas: Vec<String> = self.alphas.iter().map(arith::format_rational).collect();
            d.insert("alpha".into(), format!("{{{}}}", alphas.join(",")));
            d.insert("x".into(), format!("-{0}..={0}", self.max_r));
        }
        for &(name, value) in id.fixed() {
            d.insert(name.into(), format!("{value} (fixed)"));
        }
        d
    }
}

impl Default for Grid {
    fn default() -> Self {
        Grid::desk()
    }
}

/// `1, 2, 5, 1/2, -5/2, 7/3`.
pub fn default_alphas() -> Vec<Rational> {
    vec![
        arith::int(1),
        arith::int(2),
        arith::int(5),
        arith::ratio(1, 2),
        arith::ratio(-5, 2),
        arith::ratio(7, 3),
    ]
}

/// One parameter tuple. Unused axes are `None` and omitted from output;
/// the derived order is lexicographic in `(n, k, r, p, q, alpha, x)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub alpha: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<i64>,
}

impl Point {
    pub(crate) fn n(&self) -> usize {
        self.n.unwrap_or(0)
    }
    pub(crate) fn k(&self) -> usize {
        self.k.unwrap_or(0)
    }
    pub(crate) fn r(&self) -> usize {
        self.r.unwrap_or(0)
    }
    pub(crate) fn p(&self) -> usize {
        self.p.unwrap_or(0)
    }
    pub(crate) fn q(&self) -> usize {
        self.q.unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Axes {
    pub n: bool,
    pub k: bool,
    pub r: bool,
    pub p: bool,
    pub q: bool,
    pub alpha: bool,
}
