use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::Coeff;

/// Finite linear combination of basis morphisms, keyed by basis index. Never stores
/// zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LinComb(BTreeMap<usize, Coeff>);

impl LinComb {
    pub fn zero() -> Self {
        LinComb(BTreeMap::new())
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, Coeff::one())
    }

    pub fn term(i: usize, c: Coeff) -> Self {
        let mut l = Self::zero();
        l.add_term(i, c);
        l
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Coeff)>) -> Self {
        let mut l = Self::zero();
        for (i, c) in terms {
            l.add_term(i, c);
        }
        l
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Coeff {
        self.0.get(&i).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Coeff)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn add_term(&mut self, i: usize, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(i).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (i, v) in other.iter() {
            self.add_term(i, v * c);
        }
    }

    pub fn scaled(&self, c: &Coeff) -> LinComb {
        let mut out = LinComb::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one());
        out
    }

    /// Drops terms for which `f` returns zero after mapping each coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(usize, &Coeff) -> Coeff) -> LinComb {
        LinComb::from_terms(self.iter().map(|(i, c)| (i, f(i, c))))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (usize, Coeff)> {
        self.0.into_iter()
    }
}

impl fmt::Debug for LinComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(i, c)| format!("{c}*#{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
