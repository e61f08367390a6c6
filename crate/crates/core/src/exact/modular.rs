//! p-adic valuation and reduction of rationals into F_p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::BigRational;
use crate::{Error, Result};

/// Image of a rational under reduction modulo a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModularValue {
    /// A residue in `[0, p)`.
    Residue(u64),
    /// The reduced denominator is divisible by `p`.
    Undefined,
}

impl ModularValue {
    pub fn residue(self) -> Option<u64> {
        match self {
            ModularValue::Residue(r) => Some(r),
            ModularValue::Undefined => None,
        }
    }

    pub fn is_defined(self) -> bool {
        matches!(self, ModularValue::Residue(_))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `<= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(k, &is_p)| is_p.then_some(k as u64))
        .collect()
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// Returns `v` with `q = p^v * a/b`, `p` dividing neither `a` nor `b`.
pub fn p_valuation(q: &BigRational, p: u64) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if q.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let p = BigInt::from(p);
    Ok(int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p))
}

/// Reduces `q` into F_p. `p` must be an odd prime.
pub fn reduce_mod_p(q: &BigRational, p: u64) -> Result<ModularValue> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(reduce_unchecked(q, p))
}

/// Reduction for a modulus already known to be an odd prime.
pub(crate) fn reduce_unchecked(q: &BigRational, p: u64) -> ModularValue {
    let pb = BigInt::from(p);
    let den = q.denom().mod_floor(&pb).to_u64().expect("residue fits in u64");
    if den == 0 {
        return ModularValue::Undefined;
    }
    let num = q.numer().mod_floor(&pb).to_u64().expect("residue fits in u64");
    let inv = inverse_mod(den, p).expect("nonzero residue is invertible mod a prime");
    ModularValue::Residue(mul_mod(num, inv, p))
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of `a` modulo prime `p`, or `None` when `a ≡ 0`.
pub(crate) fn inverse_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    Some(t0.rem_euclid(p as i128) as u64)
}
