//! Exact numeric substrate: rationals, prime fields and dense linear algebra.

mod field;
mod matrix;
mod modular;
mod rational;

pub use field::{Field, PrimeField, Rationals};
pub use matrix::DenseMatrix;
pub use modular::{is_prime, p_valuation, primes_up_to, reduce_mod_p, ModularValue};
pub(crate) use modular::reduce_unchecked;
pub use rational::{format_rational, parse_rational, rat, BigRational};
