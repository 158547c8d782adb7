use std::cmp::Ordering;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;

use super::vars::{Vars, MAX_VARS};

/// Exponent vector over the variable set `V`. Unused slots are zero.
#[derive(Copy, Clone)]
pub struct Monomial<V> {
    exps: [u16; MAX_VARS],
    _vars: PhantomData<V>,
}

impl<V: Vars> Monomial<V> {
    pub fn one() -> Self {
        Monomial { exps: [0; MAX_VARS], _vars: PhantomData }
    }

    pub fn var(var: usize, e: u32) -> Self {
        Self::one().with_exp(var, e)
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= V::arity(), "too many exponents for {:?}", V::NAMES);
        let mut m = Self::one();
        for (k, &e) in exps.iter().enumerate() {
            m = m.with_exp(k, e);
        }
        m
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    pub fn exponents(&self) -> Vec<u32> {
        (0..V::arity()).map(|k| self.exp(k)).collect()
    }

    pub fn with_exp(mut self, var: usize, e: u32) -> Self {
        assert!(var < V::arity(), "variable index {var} out of range");
        self.exps[var] = u16::try_from(e).expect("exponent overflow");
        self
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Weighted degree.
    pub fn degree(&self) -> u32 {
        V::WEIGHTS
            .iter()
            .zip(self.exps.iter())
            .map(|(w, &e)| w * e as u32)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial { exps, _vars: PhantomData }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial { exps, _vars: PhantomData })
    }

    pub fn swap(&self, a: usize, b: usize) -> Self {
        let mut exps = self.exps;
        exps.swap(a, b);
        Monomial { exps, _vars: PhantomData }
    }
}

impl<V> PartialEq for Monomial<V> {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps
    }
}

impl<V> Eq for Monomial<V> {}

impl<V> Hash for Monomial<V> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl<V: Vars> Ord for Monomial<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl<V: Vars> PartialOrd for Monomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<V: Vars> std::fmt::Debug for Monomial<V> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Chern;

    #[test]
    fn graded_then_c1_descending() {
        let m = |a, b| Monomial::<Chern>::from_exponents(&[a, b]);
        let mut v = vec![m(0, 1), m(1, 0), m(2, 0), m(0, 0), m(1, 1), m(3, 0)];
        v.sort();
        assert_eq!(v, vec![m(0, 0), m(1, 0), m(2, 0), m(0, 1), m(3, 0), m(1, 1)]);
    }

    #[test]
    fn order_is_multiplicative() {
        let m = |a, b| Monomial::<Chern>::from_exponents(&[a, b]);
        let (x, y, z) = (m(2, 0), m(0, 1), m(1, 3));
        assert_eq!(x.cmp(&y), x.mul(&z).cmp(&y.mul(&z)));
        assert_eq!(m(3, 2).div(&m(1, 2)), Some(m(2, 0)));
        assert_eq!(m(3, 1).div(&m(1, 2)), None);
    }
}
