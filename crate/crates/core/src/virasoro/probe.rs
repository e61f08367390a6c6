//! Rank-comparison probe between characteristic 0 and characteristic p.
//!
//! "Minimal series over F_p" is taken to mean the irreducible quotient of
//! the mod-p Verma module at the reduced `(c_l, h)`. Its graded dimensions
//! are the ranks of the mod-p Gram matrices, compared level by level with
//! the ranks over Q.

use serde::Serialize;

use super::{VermaModule, VermaParams};
use crate::exact::{format_rational, BigRational};
use crate::weights::{central_charge, MinimalLabel};
use crate::Result;

/// Default truncation level; `p(8) = 22` basis monomials.
pub const DEFAULT_MAX_LEVEL: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Consistent,
    RankDropAtLevel(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeLevel {
    pub level: usize,
    pub rank_q: usize,
    pub rank_fp: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeVerdict {
    pub label: MinimalLabel,
    pub prime: u64,
    pub max_level: usize,
    pub levels: Vec<ProbeLevel>,
    pub verdict: Verdict,
}

/// Compares graded ranks of `L(c_l, h_{m,n})` over Q and over F_p.
///
/// Fails with `DegenerateParams` when `c_l` or `h_{m,n}` is undefined mod p.
pub fn irreducibility_probe(label: MinimalLabel, p: u64, max_level: usize) -> Result<ProbeVerdict> {
    let c = central_charge(label.ell())?;
    let h = label.weight();
    let modular = VermaParams::reduced(&c, &h, p)?;
    let mut over_q = VermaModule::new(VermaParams::rational(c, h));
    let mut over_p = VermaModule::new(modular);

    let mut levels = Vec::with_capacity(max_level + 1);
    let mut verdict = Verdict::Consistent;
    for level in 0..=max_level {
        let rank_q = over_q.gram_matrix(level).rank();
        let rank_fp = over_p.gram_matrix(level).rank();
        debug_assert!(rank_fp <= rank_q);
        if rank_fp < rank_q && verdict == Verdict::Consistent {
            verdict = Verdict::RankDropAtLevel(level);
        }
        levels.push(ProbeLevel { level, rank_q, rank_fp });
    }
    Ok(ProbeVerdict { label, prime: p, max_level, levels, verdict })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KacLevel {
    pub level: usize,
    pub determinant: String,
    pub vanishes: bool,
    pub expected_vanishing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KacReport {
    pub label: MinimalLabel,
    pub first_singular_level: u64,
    pub levels: Vec<KacLevel>,
    pub passed: bool,
}

/// Checks that `det Gram_N(c_l, h_{m,n})` over Q vanishes exactly for
/// `N >= min(mn, (l+1-m)(l+2-n))`, for `N <= max_level`.
pub fn kac_vanishing_check(label: MinimalLabel, max_level: usize) -> Result<KacReport> {
    let c = central_charge(label.ell())?;
    let mut module = VermaModule::new(VermaParams::rational(c, label.weight()));
    let d_min = label.first_singular_level();
    let mut levels = Vec::with_capacity(max_level + 1);
    for level in 0..=max_level {
        let det: BigRational = module.gram_matrix(level).determinant()?;
        let vanishes = det == BigRational::from_integer(0.into());
        levels.push(KacLevel {
            level,
            determinant: format_rational(&det),
            vanishes,
            expected_vanishing: level as u64 >= d_min,
        });
    }
    let passed = levels.iter().all(|l| l.vanishes == l.expected_vanishing);
    Ok(KacReport { label, first_singular_level: d_min, levels, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::canonicalize;
    use crate::Error;

    #[test]
    fn kac_small_cases() {
        let r = kac_vanishing_check(MinimalLabel::new(2, 1, 1).unwrap(), 3).unwrap();
        assert_eq!(r.first_singular_level, 1);
        assert!(r.levels[1].vanishes);
        assert!(r.passed);

        let r = kac_vanishing_check(MinimalLabel::new(2, 2, 2).unwrap(), 3).unwrap();
        assert_eq!(r.first_singular_level, 2);
        assert_eq!(r.levels[1].determinant, "1/8");
        assert!(r.levels[2].vanishes);
        assert!(r.passed);

        let r = kac_vanishing_check(MinimalLabel::new(3, 2, 1).unwrap(), 3).unwrap();
        assert_eq!(r.first_singular_level, 2);
        assert!(!r.levels[1].vanishes && r.levels[2].vanishes);
        assert!(r.passed);
    }

    #[test]
    fn probe_consistent_above_bound() {
        let v = irreducibility_probe(MinimalLabel::new(2, 1, 1).unwrap(), 11, 6).unwrap();
        assert_eq!(v.verdict, Verdict::Consistent);
        let v = irreducibility_probe(canonicalize(2, 2, 2).unwrap(), 101, 6).unwrap();
        assert_eq!(v.verdict, Verdict::Consistent);
    }

    #[test]
    fn probe_rejects_degenerate_params() {
        let err = irreducibility_probe(MinimalLabel::new(3, 2, 2).unwrap(), 5, 6).unwrap_err();
        assert!(matches!(err, Error::DegenerateParams { prime: 5, .. }));
    }
}
