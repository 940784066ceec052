//! Sparse formal linear combinations with exact coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::rational::Q;

/// A finite sum `Σ q_k · k` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Combo<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for Combo<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Combo<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        let mut c = Self::zero();
        c.terms.insert(k, Q::from_integer(1.into()));
        c
    }

    pub fn term(k: K, coeff: Q) -> Self {
        let mut c = Self::zero();
        c.add_term(k, coeff);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Q)>>(it: I) -> Self {
        let mut c = Self::zero();
        for (k, v) in it {
            c.add_term(k, v);
        }
        c
    }

    pub fn add_term(&mut self, k: K, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Q) {
        if s.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * s);
        }
    }

    pub fn scaled(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect(),
        }
    }

    pub fn coeff(&self, k: &K) -> Q {
        self.terms.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<K, Q> {
        self.terms
    }

    pub fn retain<F: FnMut(&K) -> bool>(&mut self, mut f: F) {
        self.terms.retain(|k, _| f(k));
    }

    pub fn filtered<F: FnMut(&K) -> bool>(&self, mut f: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| f(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<L: Ord + Clone, F: FnMut(&K) -> Combo<L>>(&self, mut f: F) -> Combo<L> {
        let mut out = Combo::zero();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k), v);
        }
        out
    }

    /// Relabels keys; colliding keys are summed.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> Combo<L> {
        let mut out = Combo::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }
}

impl<K: Ord + Clone> AddAssign<&Combo<K>> for Combo<K> {
    fn add_assign(&mut self, rhs: &Combo<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Combo<K>> for Combo<K> {
    fn sub_assign(&mut self, rhs: &Combo<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v.clone());
        }
    }
}

impl<K: Ord + Clone> Add<&Combo<K>> for &Combo<K> {
    type Output = Combo<K>;
    fn add(self, rhs: &Combo<K>) -> Combo<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub<&Combo<K>> for &Combo<K> {
    type Output = Combo<K>;
    fn sub(self, rhs: &Combo<K>) -> Combo<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for &Combo<K> {
    type Output = Combo<K>;
    fn neg(self) -> Combo<K> {
        Combo {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for Combo<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn cancellation_removes_terms() {
        let mut a = Combo::term("x", q(2));
        a.add_term("x", q(-2));
        assert!(a.is_zero());
        let b = &Combo::term("x", q(1)) - &Combo::term("y", q(3));
        assert_eq!(b.coeff(&"y"), q(-3));
        assert_eq!(b.len(), 2);
    }
}
