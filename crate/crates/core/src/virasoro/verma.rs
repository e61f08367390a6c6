use std::collections::HashMap;

use super::{Partition, PbwVector};
use crate::error::contract;
use crate::exact::{format_rational, reduce_unchecked, BigRational, Field, ModularValue, PrimeField, Rationals};
use crate::{Error, Result};

/// Central charge and highest weight, specialised into a field.
#[derive(Debug, Clone, PartialEq)]
pub struct VermaParams<F: Field> {
    pub field: F,
    pub c: F::Elem,
    pub h: F::Elem,
}

impl VermaParams<Rationals> {
    pub fn rational(c: BigRational, h: BigRational) -> Self {
        VermaParams { field: Rationals, c, h }
    }
}

impl VermaParams<PrimeField> {
    /// Reduces rational `(c, h)` mod `p`, failing if either is undefined.
    pub fn reduced(c: &BigRational, h: &BigRational, p: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let get = |name: &str, q: &BigRational| match reduce_unchecked(q, p) {
            ModularValue::Residue(r) => Ok(r),
            ModularValue::Undefined => Err(Error::DegenerateParams {
                what: name.to_string(),
                value: format_rational(q),
                prime: p,
            }),
        };
        Ok(VermaParams { field, c: get("c", c)?, h: get("h", h)? })
    }
}

/// The Verma module `M(c, h)` with a normal-ordering cache.
///
/// The cache maps `(k, monomial)` to the normal-ordered form of `L_k`
/// applied to that monomial. Entries depend on `(c, h)` only through the
/// scalars folded in at the leaves, so one cache serves one parameter set.
#[derive(Debug, Clone)]
pub struct VermaModule<F: Field> {
    params: VermaParams<F>,
    memo: Option<HashMap<(i64, Partition), PbwVector<F>>>,
}

impl<F: Field> VermaModule<F> {
    pub fn new(params: VermaParams<F>) -> Self {
        VermaModule { params, memo: Some(HashMap::new()) }
    }

    /// Same engine with caching switched off.
    pub fn without_memo(params: VermaParams<F>) -> Self {
        VermaModule { params, memo: None }
    }

    pub fn params(&self) -> &VermaParams<F> {
        &self.params
    }

    pub fn field(&self) -> &F {
        &self.params.field
    }

    pub fn cache_len(&self) -> usize {
        self.memo.as_ref().map_or(0, HashMap::len)
    }

    /// `L_0` eigenvalue `h + d` on degree `d`.
    pub fn l0_eigenvalue(&self, degree: usize) -> F::Elem {
        let f = &self.params.field;
        f.add(&self.params.h, &f.from_int(degree as i64))
    }

    /// Normal-ordered `L_k · state`. Positive `k` lowers the degree by `k`
    /// (down to the zero vector), negative `k` raises it.
    pub fn apply_mode(&mut self, k: i64, state: &PbwVector<F>) -> Result<PbwVector<F>> {
        if k == 0 {
            return Err(contract("L_0 acts as the scalar h + degree; use l0_eigenvalue"));
        }
        Ok(self.act_vector(k, state))
    }

    pub(super) fn act_vector(&mut self, k: i64, state: &PbwVector<F>) -> PbwVector<F> {
        let mut out = PbwVector::zero(target_degree(state.degree(), k));
        for (mono, coeff) in state.terms() {
            let image = self.act(k, mono);
            out.add_scaled(&self.params.field, &image, coeff);
        }
        out
    }

    fn act(&mut self, k: i64, mono: &Partition) -> PbwVector<F> {
        let key = (k, mono.clone());
        if let Some(hit) = self.memo.as_ref().and_then(|m| m.get(&key)) {
            return hit.clone();
        }
        let out = self.act_uncached(k, mono);
        if let Some(memo) = self.memo.as_mut() {
            memo.insert(key, out.clone());
        }
        out
    }

    fn act_uncached(&mut self, k: i64, mono: &Partition) -> PbwVector<F> {
        let field = self.params.field.clone();
        let degree = mono.degree();
        if k > 0 && k as usize > degree {
            return PbwVector::zero(0);
        }
        let Some((first, rest)) = mono.split_first() else {
            // k < 0 here: L_k v is itself a basis monomial
            return PbwVector::basis(&field, Partition::empty().prepend((-k) as u32));
        };
        let first = first as i64;
        let mut out = PbwVector::zero(target_degree(degree, k));

        if k < 0 {
            let j = -k;
            if j >= first {
                return PbwVector::basis(&field, mono.prepend(j as u32));
            }
            // L_{-j} L_{-a} = L_{-a} L_{-j} + (a - j) L_{-(a+j)}
            let inner = self.act(k, &rest);
            let moved = self.act_vector(-first, &inner);
            out.add_scaled(&field, &moved, &field.one());
            let bracket = self.act(k - first, &rest);
            out.add_scaled(&field, &bracket, &field.from_int(first - j));
            return out;
        }

        // L_k L_{-a} = L_{-a} L_k + (k + a) L_{k-a} + delta_{k,a} (k^3 - k)/12 C
        let inner = self.act(k, &rest);
        let moved = self.act_vector(-first, &inner);
        out.add_scaled(&field, &moved, &field.one());
        if k == first {
            let two_k = field.from_int(2 * k);
            let l0 = self.l0_eigenvalue(rest.degree());
            let central = field.mul(&field.from_ratio(k * k * k - k, 12), &self.params.c);
            let scalar = field.add(&field.mul(&two_k, &l0), &central);
            out.add_scaled(&field, &PbwVector::basis(&field, rest), &scalar);
        } else {
            let bracket = self.act(k - first, &rest);
            out.add_scaled(&field, &bracket, &field.from_int(k + first));
        }
        out
    }
}

fn target_degree(degree: usize, k: i64) -> usize {
    (degree as i64 - k).max(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn module(c: BigRational, h: BigRational) -> VermaModule<Rationals> {
        VermaModule::new(VermaParams::rational(c, h))
    }

    fn mono(parts: &[u32]) -> PbwVector<Rationals> {
        PbwVector::basis(&Rationals, Partition::new(parts.to_vec()).unwrap())
    }

    fn vacuum_coefficient(v: &PbwVector<Rationals>) -> BigRational {
        v.coefficient(&Rationals, &Partition::empty())
    }

    #[test]
    fn single_bracket_examples() {
        let (c, h) = (rat(3, 7), rat(5, 11));
        let mut m = module(c.clone(), h.clone());

        let r = m.apply_mode(1, &mono(&[1])).unwrap();
        assert_eq!(r.degree(), 0);
        assert_eq!(vacuum_coefficient(&r), rat(2, 1) * &h);

        let r = m.apply_mode(2, &mono(&[2])).unwrap();
        assert_eq!(vacuum_coefficient(&r), rat(4, 1) * &h + &c / rat(2, 1));

        let r = m.apply_mode(2, &mono(&[1, 1])).unwrap();
        assert_eq!(vacuum_coefficient(&r), rat(6, 1) * &h);
    }

    #[test]
    fn creation_reorders() {
        let mut m = module(rat(1, 2), rat(0, 1));
        // L_{-1} L_{-2} v = L_{-2} L_{-1} v + L_{-3} v
        let r = m.apply_mode(-1, &mono(&[2])).unwrap();
        assert_eq!(r.degree(), 3);
        assert_eq!(r.coefficient(&Rationals, &Partition::new(vec![2, 1]).unwrap()), rat(1, 1));
        assert_eq!(r.coefficient(&Rationals, &Partition::new(vec![3]).unwrap()), rat(1, 1));
        assert_eq!(r.len(), 2);
        // already ordered
        let r = m.apply_mode(-3, &mono(&[2, 1])).unwrap();
        assert_eq!(r, mono(&[3, 2, 1]));
    }

    #[test]
    fn annihilation_and_zero_mode() {
        let mut m = module(rat(1, 2), rat(1, 16));
        assert!(m.apply_mode(1, &PbwVector::vacuum(&Rationals)).unwrap().is_zero());
        assert!(m.apply_mode(3, &mono(&[1, 1])).unwrap().is_zero());
        assert!(m.apply_mode(0, &mono(&[1])).is_err());
        assert_eq!(m.l0_eigenvalue(3), rat(49, 16));
    }

    #[test]
    fn prime_field_params() {
        let p = VermaParams::reduced(&rat(1, 2), &rat(1, 16), 7).unwrap();
        assert_eq!((p.c, p.h), (4, 4));
        let err = VermaParams::reduced(&rat(7, 10), &rat(3, 80), 5).unwrap_err();
        assert!(matches!(err, Error::DegenerateParams { .. }));
        assert!(VermaParams::reduced(&rat(1, 2), &rat(0, 1), 2).is_err());
    }
}
