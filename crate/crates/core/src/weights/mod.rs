//! Minimal-series weight arithmetic and the bad/good prime classification.

mod primes;
mod sets;

pub use primes::{
    bad_primes, classify_prime, verify_exceptional, verify_prop_h, verify_prop_x,
    ExceptionalReport, PrimeClassification, PrimeStatus, PropHReport, PropXReport,
};
pub use sets::{
    b_block, b_set_bruteforce, b_set_intervals, d_matrix, full_a_matrix, g_block, g_set,
    g_union, IntMatrix, IntervalSet,
};

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::contract;
use crate::exact::BigRational;
use crate::Result;

/// The conjectural characteristic bound `2l^2 + l - 3 = (2l+3)(l-1)`.
pub fn prime_bound(ell: u64) -> u64 {
    2 * ell * ell + ell - 3
}

fn check_ell(ell: u64) -> Result<()> {
    if ell < 2 {
        return Err(contract(format!("level l = {ell} must be at least 2")));
    }
    Ok(())
}

fn check_indices(ell: u64, m: u64, n: u64) -> Result<()> {
    check_ell(ell)?;
    if !(1..=ell).contains(&m) || !(1..=ell + 1).contains(&n) {
        return Err(contract(format!(
            "indices (m, n) = ({m}, {n}) outside [1, {ell}] x [1, {}]",
            ell + 1
        )));
    }
    Ok(())
}

/// `c_l = 1 - 6 / ((l+1)(l+2))`.
pub fn central_charge(ell: u64) -> Result<BigRational> {
    check_ell(ell)?;
    let den = BigInt::from((ell + 1) * (ell + 2));
    Ok(BigRational::from_integer(1.into()) - BigRational::new(6.into(), den))
}

/// Numerator `(m(l+2) - n(l+1))^2 - 1` of the weight `h_{m,n}`.
pub fn h_numerator(ell: u64, m: u64, n: u64) -> i64 {
    let x = (m * (ell + 2)) as i64 - (n * (ell + 1)) as i64;
    x * x - 1
}

/// `h_{m,n;l} = ((m(l+2) - n(l+1))^2 - 1) / (4(l+1)(l+2))`.
pub fn highest_weight(ell: u64, m: u64, n: u64) -> Result<BigRational> {
    check_indices(ell, m, n)?;
    Ok(BigRational::new(
        BigInt::from(h_numerator(ell, m, n)),
        BigInt::from(4 * (ell + 1) * (ell + 2)),
    ))
}

/// `(m + m')(l+2) - (n + n')(l+1)`.
pub fn d_plus(ell: u64, m: u64, n: u64, m2: u64, n2: u64) -> i64 {
    ((m + m2) * (ell + 2)) as i64 - ((n + n2) * (ell + 1)) as i64
}

/// `(m - m')(l+2) - (n - n')(l+1)`.
pub fn d_minus(ell: u64, m: u64, n: u64, m2: u64, n2: u64) -> i64 {
    (m as i64 - m2 as i64) * (ell + 2) as i64 - (n as i64 - n2 as i64) * (ell + 1) as i64
}

/// A minimal-series label `(l, m, n)` in canonical range `1 <= n <= m <= l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MinimalLabel {
    ell: u64,
    m: u64,
    n: u64,
}

impl MinimalLabel {
    /// Builds the label, failing unless `(m, n)` is already canonical.
    pub fn new(ell: u64, m: u64, n: u64) -> Result<Self> {
        check_indices(ell, m, n)?;
        if n > m {
            return Err(contract(format!("label ({m}, {n}) is not canonical (n > m)")));
        }
        Ok(MinimalLabel { ell, m, n })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn weight(&self) -> BigRational {
        BigRational::new(
            BigInt::from(h_numerator(self.ell, self.m, self.n)),
            BigInt::from(4 * (self.ell + 1) * (self.ell + 2)),
        )
    }

    /// Lowest level carrying a singular vector in the Verma module over Q.
    pub fn first_singular_level(&self) -> u64 {
        (self.m * self.n).min((self.ell + 1 - self.m) * (self.ell + 2 - self.n))
    }
}

impl fmt::Display for MinimalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// Maps `(m, n)` to the canonical representative of `{(m, n), (l+1-m, l+2-n)}`.
pub fn canonicalize(ell: u64, m: u64, n: u64) -> Result<MinimalLabel> {
    check_indices(ell, m, n)?;
    if n <= m {
        Ok(MinimalLabel { ell, m, n })
    } else {
        Ok(MinimalLabel { ell, m: ell + 1 - m, n: ell + 2 - n })
    }
}

/// All `l(l+1)/2` canonical labels, ordered by `m` then `n`.
pub fn canonical_labels(ell: u64) -> Result<Vec<MinimalLabel>> {
    check_ell(ell)?;
    Ok((1..=ell)
        .flat_map(|m| (1..=m).map(move |n| MinimalLabel { ell, m, n }))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    #[test]
    fn central_charges() {
        assert_eq!(central_charge(2).unwrap(), rat(1, 2));
        assert_eq!(central_charge(3).unwrap(), rat(7, 10));
        assert_eq!(central_charge(4).unwrap(), rat(4, 5));
        assert!(central_charge(1).is_err());
    }

    #[test]
    fn weights() {
        for ell in 2..10 {
            assert_eq!(highest_weight(ell, 1, 1).unwrap(), rat(0, 1));
        }
        assert_eq!(highest_weight(2, 2, 1).unwrap(), rat(1, 2));
        assert_eq!(highest_weight(2, 2, 2).unwrap(), rat(1, 16));
        assert_eq!(highest_weight(3, 2, 2).unwrap(), rat(3, 80));
        assert!(highest_weight(3, 4, 1).is_err());
        assert!(highest_weight(3, 1, 5).is_err());
        assert!(highest_weight(3, 0, 1).is_err());
    }

    #[test]
    fn canonical_forms() {
        let l = canonicalize(2, 1, 2).unwrap();
        assert_eq!((l.m(), l.n()), (2, 2));
        assert_eq!(highest_weight(2, 1, 2).unwrap(), highest_weight(2, 2, 2).unwrap());
        let l = canonicalize(5, 3, 2).unwrap();
        assert_eq!((l.m(), l.n()), (3, 2));
        let l = canonicalize(3, 1, 3).unwrap();
        assert_eq!((l.m(), l.n()), (3, 2));
        assert_eq!(highest_weight(3, 1, 3).unwrap(), l.weight());
        assert!(MinimalLabel::new(3, 1, 3).is_err());
    }

    #[test]
    fn symmetry_exhaustive_to_thirty() {
        for ell in 2..=30 {
            for m in 1..=ell {
                for n in 1..=ell + 1 {
                    let c = canonicalize(ell, m, n).unwrap();
                    assert!(c.n() <= c.m());
                    assert_eq!(c.weight(), highest_weight(ell, m, n).unwrap());
                }
            }
            assert_eq!(canonical_labels(ell).unwrap().len() as u64, ell * (ell + 1) / 2);
        }
    }

    #[test]
    fn d_values() {
        assert_eq!(d_minus(7, 3, 4, 3, 4), 0);
        assert_eq!(d_plus(5, 5, 1, 5, 2), 52);
        assert_eq!(d_plus(5, 5, 1, 5, 2) as u64, prime_bound(5));
        assert_eq!(d_plus(5, 5, 1, 5, 1) as u64, 2 * (25 + 5 - 1));
    }

    #[test]
    fn h_difference_factors_for_canonical_pairs() {
        for ell in 2..=12 {
            let labels = canonical_labels(ell).unwrap();
            for a in &labels {
                for b in &labels {
                    let diff = h_numerator(ell, a.m, a.n) - h_numerator(ell, b.m, b.n);
                    let prod = d_plus(ell, a.m, a.n, b.m, b.n) * d_minus(ell, a.m, a.n, b.m, b.n);
                    assert_eq!(diff, prod);
                }
            }
        }
    }

    fn tuple() -> impl Strategy<Value = (u64, u64, u64, u64, u64)> {
        (2u64..60).prop_flat_map(|ell| (Just(ell), 1..=ell, 1..=ell + 1, 1..=ell, 1..=ell + 1))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn h_difference_factors((ell, m, n, m2, n2) in tuple()) {
            let diff = h_numerator(ell, m, n) - h_numerator(ell, m2, n2);
            prop_assert_eq!(diff, d_plus(ell, m, n, m2, n2) * d_minus(ell, m, n, m2, n2));
        }
    }
}
