use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

/// Always-reduced rational with arbitrary-precision parts.
///
/// `num_rational::Ratio` normalises after every operation, so the stored
/// numerator and denominator are coprime with a positive denominator.
pub type BigRational = num_rational::BigRational;

/// Shorthand for `numer / denom` as a reduced [`BigRational`].
///
/// Panics if `denom == 0`.
pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Formats a rational as `num/den`, always including the denominator.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::ParseRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}
