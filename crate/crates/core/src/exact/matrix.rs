//! Dense matrices over a [`Field`], with fraction-free elimination over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{Field, PrimeField, Rationals};
use super::modular::{mul_mod, reduce_unchecked, ModularValue};
use super::BigRational;
use crate::error::contract;
use crate::{Error, Result};

/// Row-major rectangular matrix whose entries all live in `field`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, entries: Vec<F::Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(contract(format!(
                "{} entries do not fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(DenseMatrix { field, rows, cols, entries })
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(contract("ragged rows"));
        }
        Self::new(field, n, m, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        DenseMatrix { field, rows, cols, entries }
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        Self::from_fn(field, rows, cols, |_, _| z.clone())
    }

    pub fn identity(field: F, n: usize) -> Self {
        let (z, o) = (field.zero(), field.one());
        Self::from_fn(field, n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn rank(&self) -> usize {
        F::rank(self)
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl DenseMatrix<Rationals> {
    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<BigRational> {
        if !self.is_square() {
            return Err(contract(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(BigRational::one());
        }
        let (ints, scale) = integer_rows(self);
        let (rank, sign, last) = bareiss(ints, self.rows, self.cols);
        if rank < self.rows {
            return Ok(BigRational::zero());
        }
        Ok(BigRational::new(last * sign, scale))
    }

    /// Entry-wise reduction into F_p; fails if some entry is undefined mod p.
    pub fn reduce_mod(&self, field: PrimeField) -> Result<DenseMatrix<PrimeField>> {
        let p = field.prime();
        let mut entries = Vec::with_capacity(self.entries.len());
        for q in &self.entries {
            match reduce_unchecked(q, p) {
                ModularValue::Residue(r) => entries.push(r),
                ModularValue::Undefined => {
                    return Err(Error::DegenerateParams {
                        what: "matrix entry".into(),
                        value: super::format_rational(q),
                        prime: p,
                    })
                }
            }
        }
        DenseMatrix::new(field, self.rows, self.cols, entries)
    }
}

impl DenseMatrix<PrimeField> {
    pub fn determinant(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(contract(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(prime_field_echelon(self).1)
    }
}

/// Clears denominators row by row. Returns the integer rows and the product
/// of the row multipliers.
fn integer_rows(m: &DenseMatrix<Rationals>) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let mut out = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let row = m.row(i);
        let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        out.push(
            row.iter()
                .map(|q| q.numer() * (&lcm / q.denom()))
                .collect::<Vec<_>>(),
        );
        scale *= lcm;
    }
    (out, scale)
}

/// Bareiss elimination on an integer matrix, pivoting on the first nonzero
/// entry of each column. Every intermediate entry is a minor of the input,
/// so each division is exact.
///
/// Returns `(rank, sign of the row permutation, last pivot)`. For a
/// full-rank square input the last pivot times the sign is the determinant.
fn bareiss(mut a: Vec<Vec<BigInt>>, rows: usize, cols: usize) -> (usize, i32, BigInt) {
    let mut prev = BigInt::one();
    let mut sign = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if pivot != r {
            a.swap(pivot, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    (r, sign, prev)
}

pub(super) fn rational_rank(m: &DenseMatrix<Rationals>) -> usize {
    let (ints, _) = integer_rows(m);
    bareiss(ints, m.rows, m.cols).0
}

/// Gaussian elimination over F_p. Returns `(rank, determinant)`; the
/// determinant is only meaningful for square input.
#[allow(clippy::needless_range_loop)]
pub(super) fn prime_field_echelon(m: &DenseMatrix<PrimeField>) -> (usize, u64) {
    let f = m.field;
    let p = f.prime();
    let mut a = m.to_rows();
    let mut det = 1u64;
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(pivot) = (r..m.rows).find(|&i| a[i][c] != 0) else {
            det = 0;
            continue;
        };
        if pivot != r {
            a.swap(pivot, r);
            det = f.neg(&det);
        }
        det = mul_mod(det, a[r][c], p);
        let inv = f.inv(a[r][c]).expect("pivot is nonzero");
        for i in r + 1..m.rows {
            let factor = mul_mod(a[i][c], inv, p);
            if factor == 0 {
                continue;
            }
            for j in c..m.cols {
                let sub = mul_mod(factor, a[r][j], p);
                a[i][j] = f.sub(&a[i][j], &sub);
            }
        }
        r += 1;
    }
    if r < m.rows.min(m.cols) || m.rows != m.cols {
        det = 0;
    }
    (r, det)
}
