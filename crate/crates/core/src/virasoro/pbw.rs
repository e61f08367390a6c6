use std::collections::BTreeMap;

use super::Partition;
use crate::exact::Field;

/// Homogeneous element of a Verma module in the PBW basis. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct PbwVector<F: Field> {
    degree: usize,
    terms: BTreeMap<Partition, F::Elem>,
}

impl<F: Field> PbwVector<F> {
    pub fn zero(degree: usize) -> Self {
        PbwVector { degree, terms: BTreeMap::new() }
    }

    pub fn monomial(field: &F, partition: Partition, coeff: F::Elem) -> Self {
        let mut v = Self::zero(partition.degree());
        if !field.is_zero(&coeff) {
            v.terms.insert(partition, coeff);
        }
        v
    }

    pub fn basis(field: &F, partition: Partition) -> Self {
        Self::monomial(field, partition, field.one())
    }

    /// The highest-weight vector `v`.
    pub fn vacuum(field: &F) -> Self {
        Self::basis(field, Partition::empty())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &F::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, field: &F, p: &Partition) -> F::Elem {
        self.terms.get(p).cloned().unwrap_or_else(|| field.zero())
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, field: &F, other: &PbwVector<F>, scale: &F::Elem) {
        if other.is_zero() || field.is_zero(scale) {
            return;
        }
        if self.is_zero() {
            self.degree = other.degree;
        }
        debug_assert_eq!(self.degree, other.degree, "mixing degrees");
        for (p, c) in &other.terms {
            let term = field.mul(scale, c);
            match self.terms.get_mut(p) {
                Some(existing) => {
                    *existing = field.add(existing, &term);
                    if field.is_zero(existing) {
                        self.terms.remove(p);
                    }
                }
                None => {
                    self.terms.insert(p.clone(), term);
                }
            }
        }
    }

    pub fn scaled(&self, field: &F, scale: &F::Elem) -> Self {
        let mut out = Self::zero(self.degree);
        out.add_scaled(field, self, scale);
        out
    }
}
