//! Brute-force oracle: walk every set partition (restricted growth
//! strings) or permutation (Heap's algorithm) of `{1..N}` and count those
//! keeping `1..r` in distinct blocks or cycles.

use num_bigint::BigUint;

use super::StirlingKind;
use crate::{Error, Result};

/// Largest `N` the oracle will enumerate (`10! = 3_628_800` permutations).
pub const ENUMERATION_BUDGET: usize = 10;

/// Counts for one `(kind, N)` and every `r` and `K` at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationCounts {
    kind: StirlingKind,
    n: usize,
    /// `counts[r][k]` for `r = 0..=n`, `k = 0..=n`.
    counts: Vec<Vec<u64>>,
}

impl EnumerationCounts {
    pub fn compute(kind: StirlingKind, n: usize) -> Result<Self> {
        if n > ENUMERATION_BUDGET {
            return Err(Error::BudgetExceeded { n, max: ENUMERATION_BUDGET });
        }
        let mut counts = vec![vec![0u64; n + 1]; n + 1];
        let mut tally = |blocks: usize, separated_prefix: usize| {
            for row in counts.iter_mut().take(separated_prefix + 1) {
                row[blocks] += 1;
            }
        };
        match kind {
            StirlingKind::SecondKind => for_each_set_partition(n, &mut tally),
            StirlingKind::FirstKindUnsigned => for_each_permutation(n, &mut tally),
        }
        Ok(EnumerationCounts { kind, n, counts })
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of structures on `{1..N}` with `k` blocks/cycles and `1..r`
    /// separated; zero when `r > N` or `k > N`.
    pub fn count(&self, k: usize, r: usize) -> u64 {
        self.counts.get(r).and_then(|row| row.get(k)).copied().unwrap_or(0)
    }

    /// All structures enumerated (Bell number or `N!`).
    pub fn total(&self) -> u64 {
        self.counts[0].iter().sum()
    }
}

/// Brute-force `[N K]_r` / `{N K}_r` for `N <= ENUMERATION_BUDGET`.
pub fn rstir_enum_oracle(kind: StirlingKind, n: usize, k: usize, r: usize) -> Result<BigUint> {
    Ok(BigUint::from(EnumerationCounts::compute(kind, n)?.count(k, r)))
}

/// Calls `visit(blocks, separated_prefix)` once per set partition, where
/// `separated_prefix` is the largest `r` with `1..r` in distinct blocks.
fn for_each_set_partition(n: usize, visit: &mut impl FnMut(usize, usize)) {
    if n == 0 {
        visit(0, 0);
        return;
    }
    // Restricted growth string: rgs[0] = 0, rgs[i] <= 1 + max(rgs[..i]).
    let mut rgs = vec![0usize; n];
    let mut prefix_max = vec![0usize; n];
    loop {
        let blocks = prefix_max[n - 1] + 1;
        // Elements 1..r sit in distinct blocks iff rgs[i] == i for i < r.
        let separated = rgs.iter().enumerate().take_while(|&(i, &b)| b == i).count();
        visit(blocks, separated);

        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            if rgs[i] <= prefix_max[i - 1] {
                rgs[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Calls `visit(cycles, separated_prefix)` once per permutation of
/// `{0..n}`.
fn for_each_permutation(n: usize, visit: &mut impl FnMut(usize, usize)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut cycle_of = vec![usize::MAX; n];
    let mut inspect = |perm: &[usize]| {
        cycle_of.fill(usize::MAX);
        let mut cycles = 0;
        for start in 0..n {
            if cycle_of[start] != usize::MAX {
                continue;
            }
            let mut e = start;
            while cycle_of[e] == usize::MAX {
                cycle_of[e] = cycles;
                e = perm[e];
            }
            cycles += 1;
        }
        // Cycle ids are assigned in order of smallest element, so 0..r are
        // in distinct cycles iff each one opens a new cycle.
        let separated = (0..n).take_while(|&i| cycle_of[i] == i).count();
        visit(cycles, separated);
    };

    // Heap's algorithm, iterative form.
    inspect(&perm);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            inspect(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
