//! Bookkeeping checks of the GKO branching
//! `V(l-1; n) ⊗ V(1; eps) = ⊕_j V(l; j) ⊗ L(c_l, h)` for affine `sl_2`,
//! and the audit of the known reducible-Weyl-module primes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::contract;
use crate::exact::{format_rational, BigRational};
use crate::weights::{canonicalize, prime_bound, MinimalLabel};
use crate::Result;

/// Dominant integral weight `(k - n) w_0 + n w_1` of level `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AffineWeight {
    pub level: u64,
    pub index: u64,
}

impl AffineWeight {
    pub fn new(level: u64, index: u64) -> Result<Self> {
        if level < 1 || index > level {
            return Err(contract(format!("no dominant weight ({level}; {index})")));
        }
        Ok(AffineWeight { level, index })
    }

    /// Sugawara `L_0` eigenvalue `n(n+2) / (4(k+2))` on the top space.
    pub fn sugawara_weight(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.index * (self.index + 2)),
            BigInt::from(4 * (self.level + 2)),
        )
    }
}

pub fn sugawara_weight(level: u64, index: u64) -> Result<BigRational> {
    Ok(AffineWeight::new(level, index)?.sugawara_weight())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `0 <= j <= n`, Virasoro label `(n+1, j+1)`.
    First,
    /// `n+1 <= j <= l`, Virasoro label `(l-n, l+1-j)`.
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetSummand {
    pub j: u64,
    pub label: MinimalLabel,
    pub branch: Branch,
    /// `h_j^{(l)} + h_label - h_n^{(l-1)} - h_eps^{(1)}`.
    #[serde(serialize_with = "serialize_rational")]
    pub depth: BigRational,
}

fn serialize_rational<S: serde::Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

/// Summands of `V(l-1; n) ⊗ V(1; eps)` with their Virasoro labels and depths.
pub fn gko_summands(ell: u64, n: u64, eps: u64) -> Result<Vec<CosetSummand>> {
    if ell < 2 || n > ell - 1 || eps > 1 {
        return Err(contract(format!("no GKO cell (l, n, eps) = ({ell}, {n}, {eps})")));
    }
    let offset = sugawara_weight(ell - 1, n)? + sugawara_weight(1, eps)?;
    let parity = (n + eps) % 2;
    let mut out = Vec::new();
    for j in (0..=ell).filter(|j| j % 2 == parity) {
        let (branch, label) = if j <= n {
            (Branch::First, canonicalize(ell, n + 1, j + 1)?)
        } else {
            (Branch::Second, canonicalize(ell, ell - n, ell + 1 - j)?)
        };
        let depth = sugawara_weight(ell, j)? + label.weight() - &offset;
        out.push(CosetSummand { j, label, branch, depth });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GkoCell {
    pub n: u64,
    pub eps: u64,
    pub summands: Vec<CosetSummand>,
    pub index_partition: bool,
    pub canonical_labels: bool,
    pub nonneg_integer_depths: bool,
    pub multiplicity_free: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GkoReport {
    pub ell: u64,
    pub cells: Vec<GkoCell>,
    pub total_summands: u64,
    pub index_partition: bool,
    pub canonical_labels: bool,
    pub nonneg_integer_depths: bool,
    pub multiplicity_free: bool,
    pub total_count: bool,
}

impl GkoReport {
    pub fn passed(&self) -> bool {
        self.index_partition
            && self.canonical_labels
            && self.nonneg_integer_depths
            && self.multiplicity_free
            && self.total_count
    }
}

/// Runs the structural checks over every `(n, eps)`.
pub fn gko_verify(ell: u64) -> Result<GkoReport> {
    let mut cells = Vec::new();
    for n in 0..ell {
        for eps in 0..=1 {
            let summands = gko_summands(ell, n, eps)?;
            let parity_class: Vec<u64> = (0..=ell).filter(|j| j % 2 == (n + eps) % 2).collect();

            // Branch ranges are recomputed from their defining inequalities.
            let first: Vec<u64> = parity_class.iter().copied().filter(|&j| j <= n).collect();
            let second: Vec<u64> = parity_class.iter().copied().filter(|&j| j > n).collect();
            let mut js: Vec<u64> = first.iter().chain(&second).copied().collect();
            js.sort_unstable();
            let listed: Vec<u64> = summands.iter().map(|s| s.j).collect();
            let index_partition = js == parity_class
                && first.iter().all(|j| !second.contains(j))
                && listed == parity_class
                && summands.iter().all(|s| (s.branch == Branch::First) == (s.j <= n));

            let canonical_labels = summands.iter().all(|s| {
                let (m, nn) = match s.branch {
                    Branch::First => (n + 1, s.j + 1),
                    Branch::Second => (ell - n, ell + 1 - s.j),
                };
                nn <= m && s.label.m() == m && s.label.n() == nn
            });
            let nonneg_integer_depths = summands
                .iter()
                .all(|s| s.depth.is_integer() && s.depth >= BigRational::from_integer(0.into()));
            let distinct: BTreeSet<(u64, MinimalLabel)> = summands.iter().map(|s| (s.j, s.label)).collect();
            let multiplicity_free = distinct.len() == summands.len();

            cells.push(GkoCell {
                n,
                eps,
                summands,
                index_partition,
                canonical_labels,
                nonneg_integer_depths,
                multiplicity_free,
            });
        }
    }
    let total_summands = cells.iter().map(|c| c.summands.len() as u64).sum();
    Ok(GkoReport {
        ell,
        total_summands,
        index_partition: cells.iter().all(|c| c.index_partition),
        canonical_labels: cells.iter().all(|c| c.canonical_labels),
        nonneg_integer_depths: cells.iter().all(|c| c.nonneg_integer_depths),
        multiplicity_free: cells.iter().all(|c| c.multiplicity_free),
        total_count: total_summands == ell * (ell + 1),
        cells,
    })
}

/// Largest known prime with a reducible level-`l` Weyl module, `l = 2..8`.
pub const TABLE1: [(u64, u64); 7] = [(2, 3), (3, 13), (4, 11), (5, 23), (6, 37), (7, 47), (8, 53)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub ell: u64,
    pub p_max_known: u64,
    pub bound: u64,
    pub below_bound: bool,
}

pub fn table1_check() -> Vec<Table1Row> {
    TABLE1
        .iter()
        .map(|&(ell, p)| {
            let bound = prime_bound(ell);
            Table1Row { ell, p_max_known: p, bound, below_bound: p < bound }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn sugawara_values() {
        for k in 1..6 {
            assert_eq!(sugawara_weight(k, 0).unwrap(), rat(0, 1));
        }
        assert_eq!(sugawara_weight(1, 1).unwrap(), rat(1, 4));
        assert_eq!(sugawara_weight(2, 1).unwrap(), rat(3, 16));
        assert!(sugawara_weight(2, 3).is_err());
    }

    fn brief(s: &[CosetSummand]) -> Vec<(u64, BigRational, BigRational)> {
        s.iter().map(|x| (x.j, x.label.weight(), x.depth.clone())).collect()
    }

    #[test]
    fn level_two_cells() {
        assert_eq!(brief(&gko_summands(2, 1, 0).unwrap()), vec![(1, rat(1, 16), rat(0, 1))]);
        assert_eq!(
            brief(&gko_summands(2, 0, 0).unwrap()),
            vec![(0, rat(0, 1), rat(0, 1)), (2, rat(1, 2), rat(1, 1))]
        );
        let s = gko_summands(2, 0, 1).unwrap();
        assert_eq!(brief(&s), vec![(1, rat(1, 16), rat(0, 1))]);
        assert_eq!(s[0].branch, Branch::Second);
        assert_eq!((s[0].label.m(), s[0].label.n()), (2, 2));
        assert!(gko_summands(2, 2, 0).is_err());
        assert!(gko_summands(2, 0, 2).is_err());
    }

    #[test]
    fn verify_small_levels() {
        let r = gko_verify(2).unwrap();
        assert!(r.passed());
        assert_eq!(r.total_summands, 6);
        let r = gko_verify(5).unwrap();
        assert!(r.passed());
        assert_eq!(r.total_summands, 30);
    }

    #[test]
    fn verify_up_to_fifty() {
        for ell in 2..=50 {
            assert!(gko_verify(ell).unwrap().passed(), "l = {ell}");
        }
    }

    #[test]
    fn table_one() {
        let rows = table1_check();
        let bounds: Vec<u64> = rows.iter().map(|r| r.bound).collect();
        assert_eq!(bounds, vec![7, 18, 33, 52, 75, 102, 133]);
        assert!(rows.iter().all(|r| r.below_bound));
    }
}
