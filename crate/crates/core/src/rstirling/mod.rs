//! r-Stirling numbers of both kinds.
//!
//! `rstir(kind, N, K, r)` takes the literal indices of the bracket/brace
//! notation: `[N K]_r` counts permutations of `{1..N}` with `K` cycles and
//! `{N K}_r` counts partitions of `{1..N}` into `K` blocks, in both cases
//! with `1..r` kept apart. Tables come from the triangular recurrences and
//! are cross-checked by two independent oracles: exhaustive enumeration
//! ([`enumeration`]) and coefficient extraction ([`gf`]).

pub mod enumeration;
pub mod gf;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, Rational};

pub use enumeration::{rstir_enum_oracle, EnumerationCounts, ENUMERATION_BUDGET};
pub use gf::rstir_gf_oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StirlingKind {
    /// Unsigned first kind: cycles of permutations.
    FirstKindUnsigned,
    /// Second kind: blocks of set partitions.
    SecondKind,
}

impl StirlingKind {
    pub const ALL: [StirlingKind; 2] = [StirlingKind::FirstKindUnsigned, StirlingKind::SecondKind];

    /// Multiplier of `f(N-1, K)` in the recurrence for `f(N, K)`.
    fn weight(self, n: usize, k: usize) -> usize {
        match self {
            StirlingKind::FirstKindUnsigned => n - 1,
            StirlingKind::SecondKind => k,
        }
    }
}

impl fmt::Display for StirlingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StirlingKind::FirstKindUnsigned => "1",
            StirlingKind::SecondKind => "2",
        })
    }
}

impl FromStr for StirlingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" | "first" => Ok(StirlingKind::FirstKindUnsigned),
            "2" | "second" => Ok(StirlingKind::SecondKind),
            _ => Err(format!("unknown Stirling kind {s:?} (expected 1 or 2)")),
        }
    }
}

/// Triangle of r-Stirling numbers for one `(kind, r)`, rows `r..=max_n`.
///
/// Row `N` stores `K = r..=N`; every other entry is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    kind: StirlingKind,
    r: usize,
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(kind: StirlingKind, r: usize, max_n: usize) -> Self {
        let mut table = StirlingTable { kind, r, rows: vec![vec![BigUint::one()]] };
        table.extend_to(max_n);
        table
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Largest `N` held by the table.
    pub fn max_n(&self) -> usize {
        self.r + self.rows.len() - 1
    }

    /// Grows the table so that `max_n() >= max_n`.
    pub fn extend_to(&mut self, max_n: usize) {
        while self.max_n() < max_n {
            let n = self.max_n() + 1;
            let prev = self.rows.last().expect("base row always present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            for k in self.r..=n {
                let mut v = BigUint::zero();
                if let Some(same) = prev.get(k - self.r) {
                    v += same * BigUint::from(self.kind.weight(n, k));
                }
                if k > self.r {
                    v += &prev[k - 1 - self.r];
                }
                row.push(v);
            }
            self.rows.push(row);
        }
    }

    /// Value at `(N, K)`, or `None` when `N` is past the computed rows.
    pub fn get(&self, n: usize, k: usize) -> Option<BigUint> {
        if n > self.max_n() {
            return None;
        }
        if n < self.r || k < self.r || k > n {
            return Some(BigUint::zero());
        }
        Some(self.rows[n - self.r][k - self.r].clone())
    }

    /// Row `N` as `(K, value)` pairs for `K = r..=N`.
    pub fn row(&self, n: usize) -> Option<impl Iterator<Item = (usize, &BigUint)>> {
        if n < self.r || n > self.max_n() {
            return None;
        }
        Some(self.rows[n - self.r].iter().enumerate().map(move |(i, v)| (i + self.r, v)))
    }
}

/// Shared cache of tables keyed by `(kind, r)`.
///
/// Tables are immutable once published; a request for more rows builds an
/// extended copy and swaps it in. Racing requests may duplicate that work
/// but always publish a complete table.
#[derive(Debug, Default)]
pub struct StirlingCache {
    tables: RwLock<HashMap<(StirlingKind, usize), Arc<StirlingTable>>>,
}

impl StirlingCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static StirlingCache {
        static CACHE: OnceLock<StirlingCache> = OnceLock::new();
        CACHE.get_or_init(StirlingCache::new)
    }

    /// A table for `(kind, r)` with at least rows up to `min_n`.
    pub fn table(&self, kind: StirlingKind, r: usize, min_n: usize) -> Arc<StirlingTable> {
        let key = (kind, r);
        if let Some(t) = self.read_cached(key) {
            if t.max_n() >= min_n {
                return t;
            }
        }
        let existing = self.read_cached(key);
        let target = existing
            .as_ref()
            .map_or(min_n, |t| min_n.max(2 * t.max_n()).max(r + 16));
        let mut table = match existing {
            Some(t) => (*t).clone(),
            None => StirlingTable::new(kind, r, r),
        };
        table.extend_to(target);
        let table = Arc::new(table);
        let mut guard = self.tables.write().unwrap_or_else(|e| e.into_inner());
        let slot = guard.entry(key).or_insert_with(|| table.clone());
        if slot.max_n() < table.max_n() {
            *slot = table;
        }
        slot.clone()
    }

    pub fn get(&self, kind: StirlingKind, n: usize, k: usize, r: usize) -> BigUint {
        if n < r || k < r || k > n {
            return BigUint::zero();
        }
        self.table(kind, r, n).get(n, k).expect("table covers requested row")
    }

    fn read_cached(&self, key: (StirlingKind, usize)) -> Option<Arc<StirlingTable>> {
        let guard = self.tables.read().unwrap_or_else(|e| e.into_inner());
        guard.get(&key).cloned()
    }
}

/// `[N K]_r` or `{N K}_r`; zero outside `r <= K <= N`.
pub fn rstir(kind: StirlingKind, n: usize, k: usize, r: usize) -> BigUint {
    StirlingCache::global().get(kind, n, k, r)
}

/// [`rstir`] as a rational, for use inside rational sums.
pub fn rstir_rat(kind: StirlingKind, n: usize, k: usize, r: usize) -> Rational {
    arith::from_biguint(&rstir(kind, n, k, r))
}
