use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::{self, DenseMatrix};
use super::modular::{inverse_mod, is_prime, mul_mod};
use super::BigRational;
use crate::{Error, Result};

/// Scalar field context. Elements are plain values; the context carries the
/// characteristic so that F_p elements can stay `u64`.
pub trait Field: Clone + fmt::Debug + PartialEq {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;

    /// `num / den` after cancelling common factors. Panics if the reduced
    /// denominator is not invertible in the field.
    #[allow(clippy::wrong_self_convention)]
    fn from_ratio(&self, num: i64, den: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Rank of a matrix over this field.
    fn rank(matrix: &DenseMatrix<Self>) -> usize
    where
        Self: Sized;

    /// Short display name, `Q` or `F_p`.
    fn name(&self) -> String;

    fn format_elem(&self, a: &Self::Elem) -> String;
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn rank(matrix: &DenseMatrix<Self>) -> usize {
        matrix::rational_rank(matrix)
    }

    fn name(&self) -> String {
        "Q".to_string()
    }

    fn format_elem(&self, a: &BigRational) -> String {
        super::format_rational(a)
    }
}

/// The prime field F_p for an odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` is an odd prime below 2^32.
    pub fn new(p: u64) -> Result<Self> {
        if p == 2 || p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        inverse_mod(a, self.p)
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_int(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn from_ratio(&self, num: i64, den: i64) -> u64 {
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        let inv = self
            .inv(self.reduce_i64(den))
            .unwrap_or_else(|| panic!("{den} is not invertible mod {}", self.p));
        mul_mod(self.reduce_i64(num), inv, self.p)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn rank(matrix: &DenseMatrix<Self>) -> usize {
        matrix::prime_field_echelon(matrix).0
    }

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }
}
