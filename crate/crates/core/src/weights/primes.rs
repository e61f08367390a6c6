//! Bad/good prime classification for the minimal series at central charge `c_l`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{b_set_bruteforce, b_set_intervals, canonical_labels, central_charge, check_ell, prime_bound, MinimalLabel};
use crate::error::contract;
use crate::exact::{is_prime, primes_up_to, reduce_unchecked, ModularValue};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PrimeStatus {
    Good,
    Bad,
}

/// Verdict for one `(l, p)`.
///
/// Labels whose weight is undefined mod `p` are listed in `degenerate` and
/// take no part in collision detection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeClassification {
    pub ell: u64,
    pub prime: u64,
    pub status: PrimeStatus,
    pub collisions: Vec<(MinimalLabel, MinimalLabel)>,
    pub degenerate: Vec<MinimalLabel>,
    pub central_charge_defined: bool,
    /// `p = 2` is declared bad without reducing anything.
    pub even_prime_convention: bool,
}

pub fn classify_prime(ell: u64, p: u64) -> Result<PrimeClassification> {
    check_ell(ell)?;
    if !is_prime(p) {
        return Err(contract(format!("{p} is not prime")));
    }
    if p == 2 {
        return Ok(PrimeClassification {
            ell,
            prime: p,
            status: PrimeStatus::Bad,
            collisions: Vec::new(),
            degenerate: Vec::new(),
            central_charge_defined: false,
            even_prime_convention: true,
        });
    }
    let reduce = |q: &_| reduce_unchecked(q, p);

    let mut by_residue: BTreeMap<u64, Vec<MinimalLabel>> = BTreeMap::new();
    let mut degenerate = Vec::new();
    for label in canonical_labels(ell)? {
        let h = label.weight();
        match reduce(&h) {
            ModularValue::Residue(r) => by_residue.entry(r).or_default().push(label),
            ModularValue::Undefined => degenerate.push(label),
        }
    }
    let mut collisions = Vec::new();
    for group in by_residue.values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                collisions.push((*a, *b));
            }
        }
    }
    collisions.sort();
    let status = if collisions.is_empty() { PrimeStatus::Good } else { PrimeStatus::Bad };
    Ok(PrimeClassification {
        ell,
        prime: p,
        status,
        collisions,
        degenerate,
        central_charge_defined: reduce_unchecked(&central_charge(ell)?, p).is_defined(),
        even_prime_convention: false,
    })
}

/// Every bad prime; the search stops at `2l^2 + l - 3`, above which all
/// primes are good.
pub fn bad_primes(ell: u64) -> Result<Vec<u64>> {
    check_ell(ell)?;
    let mut out = Vec::new();
    for p in primes_up_to(prime_bound(ell)) {
        if classify_prime(ell, p)?.status == PrimeStatus::Bad {
            out.push(p);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropHReport {
    pub ell: u64,
    pub bound: u64,
    /// Half-open window `(bound, hi]` that was scanned.
    pub window: (u64, u64),
    pub checked: Vec<(u64, PrimeStatus)>,
    pub passed: bool,
}

/// Classifies every prime in `(2l^2 + l - 3, 2l^2 + 3l]`; passes when all are good.
pub fn verify_prop_h(ell: u64) -> Result<PropHReport> {
    check_ell(ell)?;
    let bound = prime_bound(ell);
    let hi = 2 * ell * ell + 3 * ell;
    let mut checked = Vec::new();
    for p in primes_up_to(hi).into_iter().filter(|&p| p > bound) {
        checked.push((p, classify_prime(ell, p)?.status));
    }
    let passed = checked.iter().all(|&(_, s)| s == PrimeStatus::Good);
    Ok(PropHReport { ell, bound, window: (bound, hi), checked, passed })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropXReport {
    pub ell: u64,
    pub intervals_match: bool,
    pub max: u64,
    pub max_expected: u64,
    pub second_max: u64,
    pub second_max_expected: u64,
    pub passed: bool,
}

/// Compares enumerated `B_l` with its interval form, and checks its top two values.
pub fn verify_prop_x(ell: u64) -> Result<PropXReport> {
    let brute = b_set_bruteforce(ell)?;
    let intervals = b_set_intervals(ell)?;
    let mut top = brute.iter().rev();
    let max = *top.next().expect("B_l is nonempty");
    let second_max = *top.next().expect("B_l has two elements");
    let max_expected = 2 * (ell * ell + ell - 1);
    let second_max_expected = prime_bound(ell);
    let intervals_match = intervals.expand() == brute;
    Ok(PropXReport {
        ell,
        intervals_match,
        max,
        max_expected,
        second_max,
        second_max_expected,
        passed: intervals_match && max == max_expected && second_max == second_max_expected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalReport {
    pub ell: u64,
    pub square_l1_outside_b: bool,
    pub square_l2_outside_b: bool,
    /// `l+1` and/or `l+2` when prime, with their classification.
    pub neighbour_primes: Vec<(u64, PrimeStatus)>,
    pub passed: bool,
}

/// `(l+1)^2, (l+2)^2` avoid `B_l`, and a prime `l+1` or `l+2` is good.
pub fn verify_exceptional(ell: u64) -> Result<ExceptionalReport> {
    let b = b_set_bruteforce(ell)?;
    let square_l1_outside_b = !b.contains(&((ell + 1) * (ell + 1)));
    let square_l2_outside_b = !b.contains(&((ell + 2) * (ell + 2)));
    let mut neighbour_primes = Vec::new();
    for q in [ell + 1, ell + 2] {
        if is_prime(q) {
            neighbour_primes.push((q, classify_prime(ell, q)?.status));
        }
    }
    let passed = square_l1_outside_b
        && square_l2_outside_b
        && neighbour_primes.iter().all(|&(_, s)| s == PrimeStatus::Good);
    Ok(ExceptionalReport {
        ell,
        square_l1_outside_b,
        square_l2_outside_b,
        neighbour_primes,
        passed,
    })
}

impl std::fmt::Display for PrimeStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PrimeStatus::Good => "good",
            PrimeStatus::Bad => "bad",
        })
    }
}
