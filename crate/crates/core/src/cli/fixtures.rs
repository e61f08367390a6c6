//! Reference values reproduced by `reproduce-paper`.

use crate::exact::primes_up_to;

/// Published bad-prime lists for `l = 2..6`, given either explicitly or as
/// "all primes up to the bound except ...".
pub enum ReferenceBadPrimes {
    Explicit(&'static [u64]),
    AllPrimesExcept { bound: u64, except: &'static [u64] },
}

pub fn reference_bad_primes(ell: u64) -> Option<ReferenceBadPrimes> {
    use ReferenceBadPrimes::*;
    Some(match ell {
        2 => Explicit(&[2, 7]),
        // contains the non-prime 9, see Discrepancy::NonPrimeNine
        3 => Explicit(&[2, 3, 7, 9, 13, 17]),
        4 => AllPrimesExcept { bound: 33, except: &[5, 19, 29, 31] },
        5 => AllPrimesExcept { bound: 52, except: &[7, 29, 41, 43, 47] },
        6 => AllPrimesExcept { bound: 75, except: &[7, 41, 71, 73] },
        _ => return None,
    })
}

impl ReferenceBadPrimes {
    /// Listed values, including any non-primes.
    pub fn listed(&self) -> Vec<u64> {
        match self {
            ReferenceBadPrimes::Explicit(v) => v.to_vec(),
            ReferenceBadPrimes::AllPrimesExcept { bound, except } => primes_up_to(*bound)
                .into_iter()
                .filter(|p| !except.contains(p))
                .collect(),
        }
    }
}

/// The 9 x 6 difference table printed for `l = 5`.
pub const D_MATRIX_L5: [[u64; 6]; 9] = [
    [2, 4, 10, 16, 22, 28],
    [9, 3, 3, 9, 15, 21],
    [16, 10, 4, 2, 8, 14],
    [23, 17, 11, 5, 1, 7],
    [30, 24, 18, 12, 6, 0],
    [37, 31, 25, 19, 13, 7],
    [44, 38, 32, 26, 20, 14],
    [51, 45, 39, 33, 27, 21],
    [58, 52, 46, 40, 34, 28],
];
