//! The collision set `B_l`, its interval form, the D-matrix and `G_l`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::check_ell;
use crate::Result;

/// Sorted, disjoint, non-adjacent closed integer intervals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IntervalSet {
    intervals: Vec<(u64, u64)>,
}

impl IntervalSet {
    /// Normalises arbitrary intervals; empty ones (`lo > hi`) are dropped.
    pub fn from_intervals(raw: impl IntoIterator<Item = (u64, u64)>) -> Self {
        let mut v: Vec<(u64, u64)> = raw.into_iter().filter(|(a, b)| a <= b).collect();
        v.sort_unstable();
        let mut intervals: Vec<(u64, u64)> = Vec::with_capacity(v.len());
        for (a, b) in v {
            match intervals.last_mut() {
                Some(last) if a <= last.1.saturating_add(1) => last.1 = last.1.max(b),
                _ => intervals.push((a, b)),
            }
        }
        IntervalSet { intervals }
    }

    pub fn from_values(values: impl IntoIterator<Item = u64>) -> Self {
        Self::from_intervals(values.into_iter().map(|x| (x, x)))
    }

    pub fn intervals(&self) -> &[(u64, u64)] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.intervals.iter().any(|&(a, b)| a <= x && x <= b)
    }

    pub fn len(&self) -> u64 {
        self.intervals.iter().map(|(a, b)| b - a + 1).sum()
    }

    pub fn expand(&self) -> BTreeSet<u64> {
        self.intervals.iter().flat_map(|&(a, b)| a..=b).collect()
    }

    pub fn max(&self) -> Option<u64> {
        self.intervals.last().map(|&(_, b)| b)
    }

    /// `[lo, hi] \ self`.
    pub fn complement_in(&self, lo: u64, hi: u64) -> IntervalSet {
        let mut out = Vec::new();
        let mut cursor = lo;
        for &(a, b) in &self.intervals {
            if b < cursor {
                continue;
            }
            if a > hi {
                break;
            }
            if a > cursor {
                out.push((cursor, a - 1));
            }
            cursor = b + 1;
        }
        if cursor <= hi {
            out.push((cursor, hi));
        }
        IntervalSet::from_intervals(out)
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.intervals.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
        write!(f, "{}", parts.join(" u "))
    }
}

/// `{ |D^+| } \ {0}` over all `1 <= m, m' <= l`, `1 <= n, n' <= l+1`.
///
/// `D^+` depends on the tuple only through `s = m + m'` and `t = n + n'`,
/// and every `s` in `[2, 2l]` and `t` in `[2, 2l+2]` occurs, so the sums
/// are enumerated instead of the quadruples.
pub fn b_set_bruteforce(ell: u64) -> Result<BTreeSet<u64>> {
    check_ell(ell)?;
    let mut out = BTreeSet::new();
    for s in 2..=2 * ell {
        for t in 2..=2 * ell + 2 {
            let d = (s * (ell + 2)) as i64 - (t * (ell + 1)) as i64;
            if d != 0 {
                out.insert(d.unsigned_abs());
            }
        }
    }
    Ok(out)
}

/// `B_l(a) = [l^2 + l + a(l+2), l^2 + 2l - 1 + a(l+1)]`.
pub fn b_block(ell: u64, a: u64) -> (u64, u64) {
    (ell * ell + ell + a * (ell + 2), ell * ell + 2 * ell - 1 + a * (ell + 1))
}

/// `G_l(a) = [l^2 + l - 1 + a(l+1), l^2 + l - 1 + a(l+2)]`.
pub fn g_block(ell: u64, a: u64) -> (u64, u64) {
    let base = ell * ell + ell - 1;
    (base + a * (ell + 1), base + a * (ell + 2))
}

/// `[1, l^2 + l - 2] u B_l(0) u ... u B_l(l-1)`.
pub fn b_set_intervals(ell: u64) -> Result<IntervalSet> {
    check_ell(ell)?;
    let head = std::iter::once((1, ell * ell + ell - 2));
    Ok(IntervalSet::from_intervals(head.chain((0..ell).map(|a| b_block(ell, a)))))
}

/// Gap set below a cutoff: `[1, 2l^2 + l - 3] \ B_l`, or with
/// `corrected = true` the wider range `[1, 2l^2 + 2l - 3] \ B_l`.
pub fn g_set(ell: u64, corrected: bool) -> Result<IntervalSet> {
    let b = IntervalSet::from_values(b_set_bruteforce(ell)?);
    let hi = if corrected {
        2 * ell * ell + 2 * ell - 3
    } else {
        super::prime_bound(ell)
    };
    Ok(b.complement_in(1, hi))
}

/// `G_l(0) u ... u G_l(l-1)`.
pub fn g_union(ell: u64) -> Result<IntervalSet> {
    check_ell(ell)?;
    Ok(IntervalSet::from_intervals((0..ell).map(|a| g_block(ell, a))))
}

/// Integer matrix with its row and column labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    pub row_labels: Vec<u64>,
    pub col_labels: Vec<u64>,
    pub entries: Vec<Vec<u64>>,
}

impl IntMatrix {
    fn difference_table(row_labels: Vec<u64>, col_labels: Vec<u64>) -> Self {
        let entries = row_labels
            .iter()
            .map(|&r| col_labels.iter().map(|&c| c.abs_diff(r)).collect())
            .collect();
        IntMatrix { row_labels, col_labels, entries }
    }
}

/// The `(2l-1) x (2l+1)` table `|(n+n')(l+1) - (m+m')(l+2)|` with rows indexed
/// by `m + m' = 2..2l` and columns by `n + n' = 2..2l+2`.
pub fn full_a_matrix(ell: u64) -> Result<IntMatrix> {
    check_ell(ell)?;
    Ok(IntMatrix::difference_table(
        (2..=2 * ell).map(|s| s * (ell + 2)).collect(),
        (2..=2 * ell + 2).map(|t| t * (ell + 1)).collect(),
    ))
}

/// Left `l + 1` columns of [`full_a_matrix`]; the rest follows by rotating
/// the full table through 180 degrees.
pub fn d_matrix(ell: u64) -> Result<IntMatrix> {
    check_ell(ell)?;
    Ok(IntMatrix::difference_table(
        (2..=2 * ell).map(|s| s * (ell + 2)).collect(),
        (2..=ell + 2).map(|t| t * (ell + 1)).collect(),
    ))
}
