use super::{Poly, Vars};
use crate::coeff::Coeff;
use crate::error::{Error, Result};

/// A polynomial with every term of weighted degree above `bound` discarded.
/// Arithmetic re-truncates, so the bound is always explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<C: Coeff, V: Vars> {
    poly: Poly<C, V>,
    bound: u32,
}

impl<C: Coeff, V: Vars> TruncatedSeries<C, V> {
    pub fn new(poly: Poly<C, V>, bound: u32) -> Self {
        TruncatedSeries { poly: poly.truncate(bound), bound }
    }

    pub fn poly(&self) -> &Poly<C, V> {
        &self.poly
    }

    pub fn into_poly(self) -> Poly<C, V> {
        self.poly
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn component(&self, deg: u32) -> Poly<C, V> {
        assert!(deg <= self.bound, "degree {deg} beyond truncation bound {}", self.bound);
        self.poly.grade_component(deg)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.bound.min(other.bound);
        // split by degree so no term beyond the bound is ever formed
        let a: Vec<_> = (0..=bound).map(|k| self.poly.grade_component(k)).collect();
        let b: Vec<_> = (0..=bound).map(|k| other.poly.grade_component(k)).collect();
        let mut out = Poly::zero();
        for (i, ai) in a.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            for bj in b.iter().take(bound as usize - i + 1).filter(|p| !p.is_zero()) {
                out += &(ai * bj);
            }
        }
        TruncatedSeries { poly: out, bound }
    }

    pub fn add(&self, other: &Self) -> Self {
        TruncatedSeries::new(&self.poly + &other.poly, self.bound.min(other.bound))
    }

    /// Multiplicative inverse up to the bound. The constant term must be a
    /// unit of the coefficient ring.
    ///
    /// Solved degree by degree: `v_0 = 1/u_0`,
    /// `v_D = -(1/u_0) * sum_{k=1..D} u_k v_{D-k}`.
    pub fn invert(&self) -> Result<Self> {
        let u0 = self.poly.constant_term();
        if !u0.is_unit() {
            return Err(Error::NotInvertible(u0.to_string()));
        }
        let inv0 = C::one().try_div(&u0).ok_or_else(|| Error::NotInvertible(u0.to_string()))?;
        let u: Vec<_> = (0..=self.bound).map(|k| self.poly.grade_component(k)).collect();
        let mut v: Vec<Poly<C, V>> = vec![Poly::constant(inv0.clone())];
        for deg in 1..=self.bound as usize {
            let mut acc = Poly::zero();
            for k in 1..=deg {
                if !u[k].is_zero() && !v[deg - k].is_zero() {
                    acc += &(&u[k] * &v[deg - k]);
                }
            }
            v.push(acc.scale(&-inv0.clone()));
        }
        let mut out = Poly::zero();
        for part in &v {
            out += part;
        }
        Ok(TruncatedSeries { poly: out, bound: self.bound })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ZChern;
    use num_bigint::BigInt;

    type ZSeries = TruncatedSeries<BigInt, crate::poly::Chern>;

    fn z(s: &str) -> ZChern {
        ZChern::parse(s).unwrap()
    }

    #[test]
    fn grassmannian_inverse() {
        let u = ZSeries::new(z("1 - c1 + c2"), 3);
        let v = u.invert().unwrap();
        assert_eq!(v.component(0), z("1"));
        assert_eq!(v.component(1), z("c1"));
        assert_eq!(v.component(2), z("c1^2 - c2"));
        assert_eq!(v.component(3), z("c1^3 - 2c1c2"));
        assert!(u.mul(&v).poly().is_one());
    }

    #[test]
    fn inverse_of_one_and_non_units() {
        let one = ZSeries::new(z("1"), 5);
        assert!(one.invert().unwrap().poly().is_one());
        let u = ZSeries::new(z("2 + c1"), 4);
        assert!(matches!(u.invert(), Err(Error::NotInvertible(_))));
        let minus = ZSeries::new(z("-1 + c2"), 4);
        assert_eq!(minus.invert().unwrap().poly(), &z("-1 - c2 - c2^2"));
    }

    #[test]
    fn truncation_is_enforced() {
        let s = ZSeries::new(z("1 + c1^3 + c2^2"), 3);
        assert_eq!(s.poly(), &z("1 + c1^3"));
        assert_eq!(s.mul(&s).poly(), &z("1 + 2c1^3"));
    }
}
