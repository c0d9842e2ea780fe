use crate::ring::Ring;
use std::collections::BTreeMap;

/// Finite formal linear combination of basis labels `K` with coefficients in `C`.
///
/// Zero coefficients are never stored, so two combinations are equal iff
/// their term maps are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct LinComb<K: Ord + Clone, C: Ring> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord + Clone, C: Ring> Default for LinComb<K, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, C: Ring> LinComb<K, C> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, C::one())
    }

    pub fn term(key: K, coeff: C) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, C)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(c) => {
                c.add_assign(&coeff);
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
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

    pub fn get(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> BTreeMap<K, C> {
        self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, scale: &C) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.mul(scale));
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> LinComb<K, D> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }

    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> LinComb<L, C> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    pub fn filter(&self, f: impl Fn(&K) -> bool) -> Self {
        LinComb::from_terms(
            self.terms
                .iter()
                .filter(|(k, _)| f(k))
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    /// Linear extension of `f` applied to every basis label.
    pub fn flat_map<L: Ord + Clone>(&self, f: impl Fn(&K) -> LinComb<L, C>) -> LinComb<L, C> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Bilinear extension of `f` over pairs of basis labels.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &LinComb<L, C>,
        f: impl Fn(&K, &L) -> LinComb<M, C>,
    ) -> LinComb<M, C> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            for (l, d) in other.iter() {
                out.add_scaled(&f(k, l), &c.mul(d));
            }
        }
        out
    }
}

impl<K: Ord + Clone, C: Ring> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<T: IntoIterator<Item = (K, C)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}
