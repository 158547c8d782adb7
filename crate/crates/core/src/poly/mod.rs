//! Exact sparse multivariate polynomials over `Z` or `Q` with a weighted
//! grading, plus truncated power series.
//!
//! Terms are kept in a `BTreeMap` under a fixed graded order: weighted
//! degree ascending, then exponent vectors in descending lexicographic order
//! (so `c1^2` precedes `c2` in degree 2). Two polynomials are equal iff their
//! term maps are equal.

mod monomial;
mod serial;
mod series;
mod vars;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::coeff::Coeff;
use crate::error::{Error, Result};

pub use monomial::Monomial;
pub use series::TruncatedSeries;
pub use vars::{Chern, DegreeSymbol, Delta, Vars, Weights, MAX_VARS};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C, V: Vars> {
    terms: BTreeMap<Monomial<V>, C>,
}

/// Integer Chern polynomial, the ring where final relations live.
pub type ZChern = Poly<BigInt, Chern>;
/// Rational Chern polynomial.
pub type QChern = Poly<BigRational, Chern>;
/// Rational polynomial in `H, h, l1, l2`.
pub type WeightPoly = Poly<BigRational, Weights>;
/// Integer polynomial in `H, h, l1, l2`.
pub type ZWeightPoly = Poly<BigInt, Weights>;

impl<C: Coeff, V: Vars> Default for Poly<C, V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff, V: Vars> Poly<C, V> {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    /// The variable with index `var` in `V`.
    pub fn var(var: usize) -> Self {
        Self::term(C::one(), Monomial::var(var, 1))
    }

    pub fn term(c: C, m: Monomial<V>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms<I>(it: I) -> Self
    where
        I: IntoIterator<Item = (C, Vec<u32>)>,
    {
        let mut p = Self::zero();
        for (c, e) in it {
            p.add_term(Monomial::from_exponents(&e), c);
        }
        p
    }

    /// Sum of `c * p` over the given pairs.
    pub fn linear_combination(parts: &[(C, &Self)]) -> Self {
        let mut out = Self::zero();
        for (c, p) in parts {
            out += &p.scale(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<V>, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial<V>) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> C {
        self.coeff(&Monomial::from_exponents(exps))
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one())
    }

    /// Largest term in the canonical order.
    pub fn leading(&self) -> Option<(&Monomial<V>, &C)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial<V>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial<V>) -> Self {
        Poly {
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Product of an iterator of polynomials.
    pub fn product<'a, I: IntoIterator<Item = &'a Self>>(it: I) -> Self {
        it.into_iter().fold(Self::one(), |acc, p| &acc * p)
    }

    /// Exact quotient `self / b`, or `NotDivisible` if a remainder is left.
    pub fn exact_div(&self, b: &Self) -> Result<Self> {
        let (lm, lc) = match b.leading() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::DomainError("division by zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(&lm).ok_or(Error::NotDivisible)?;
            let c = rc.try_div(&lc).ok_or(Error::NotDivisible)?;
            for (bm, bc) in b.terms() {
                rem.add_term(bm.mul(&m), -(bc.clone() * c.clone()));
            }
            q.add_term(m, c);
        }
        Ok(q)
    }

    /// Replaces variable `var` by `value`.
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        let max_e = self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0);
        let mut powers = vec![Self::one()];
        for k in 1..=max_e as usize {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut by_power: Vec<Self> = vec![Self::zero(); max_e as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            by_power[e].add_term(m.with_exp(var, 0), c.clone());
        }
        let mut out = Self::zero();
        for (e, part) in by_power.iter().enumerate() {
            if !part.is_zero() {
                out += &(part * &powers[e]);
            }
        }
        out
    }

    /// Ring homomorphism into another variable set: variable `k` of `V`
    /// is sent to `images[k]`.
    pub fn eval_into<W: Vars>(&self, images: &[Poly<C, W>]) -> Poly<C, W> {
        assert_eq!(images.len(), V::arity(), "one image per variable");
        let mut cache: Vec<Vec<Poly<C, W>>> = images.iter().map(|p| vec![Poly::one(), p.clone()]).collect();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::<C, W>::constant(c.clone());
            for (k, pows) in cache.iter_mut().enumerate() {
                let e = m.exp(k) as usize;
                while pows.len() <= e {
                    let next = &pows[pows.len() - 1] * &images[k];
                    pows.push(next);
                }
                if e > 0 {
                    t = &t * &pows[e];
                }
            }
            out += &t;
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D, V> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Fallible coefficient map; used for checked demotion.
    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<Poly<D, V>> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    /// Keeps only terms whose monomial satisfies `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial<V>) -> bool) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Sum of the terms of weighted degree exactly `deg`.
    pub fn grade_component(&self, deg: u32) -> Self {
        self.filter_terms(|m| m.degree() == deg)
    }

    /// Drops every term of weighted degree above `bound`.
    pub fn truncate(&self, bound: u32) -> Self {
        self.filter_terms(|m| m.degree() <= bound)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.leading().map(|(m, _)| m.degree())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    /// `Some(D)` if every term has degree `D`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        match (self.min_degree(), self.max_degree()) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.degree_in(var) > 0
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.swap(a, b), c.clone())).collect(),
        }
    }

    /// Decomposes as `sum_e var^e * parts[e]` with `parts[e]` free of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let mut parts = vec![Self::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            parts[m.exp(var) as usize].add_term(m.with_exp(var, 0), c.clone());
        }
        parts
    }

    /// `Some(c)` if `self == c * other` for a scalar `c`.
    pub fn ratio_to(&self, other: &Self) -> Option<C> {
        let (om, oc) = other.leading()?;
        let c = self.coeff(om).try_div(oc)?;
        (other.scale(&c) == *self).then_some(c)
    }
}

impl<V: Vars> Poly<BigInt, V> {
    /// Lossless promotion `Z -> Q`.
    pub fn to_rational(&self) -> Poly<BigRational, V> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl<V: Vars> Poly<BigRational, V> {
    /// Checked demotion `Q -> Z`: fails if any coefficient is not an integer.
    pub fn to_integer(&self) -> Result<Poly<BigInt, V>> {
        self.try_map_coeffs(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegral(c.to_string()))
            }
        })
    }

    /// Scales by the lcm of the denominators; returns the integer
    /// polynomial and the lcm.
    pub fn clear_denominators(&self) -> (Poly<BigInt, V>, BigInt) {
        use num_integer::Integer;
        let l = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let p = self.map_coeffs(|c| (c * BigRational::from_integer(l.clone())).to_integer());
        (p, l)
    }
}

// -- arithmetic ---------------------------------------------------------

impl<C: Coeff, V: Vars> AddAssign<&Poly<C, V>> for Poly<C, V> {
    fn add_assign(&mut self, rhs: &Poly<C, V>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<C: Coeff, V: Vars> SubAssign<&Poly<C, V>> for Poly<C, V> {
    fn sub_assign(&mut self, rhs: &Poly<C, V>) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<C: Coeff, V: Vars> Add for &Poly<C, V> {
    type Output = Poly<C, V>;
    fn add(self, rhs: &Poly<C, V>) -> Poly<C, V> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coeff, V: Vars> Sub for &Poly<C, V> {
    type Output = Poly<C, V>;
    fn sub(self, rhs: &Poly<C, V>) -> Poly<C, V> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coeff, V: Vars> Neg for &Poly<C, V> {
    type Output = Poly<C, V>;
    fn neg(self) -> Poly<C, V> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff, V: Vars> Mul for &Poly<C, V> {
    type Output = Poly<C, V>;
    fn mul(self, rhs: &Poly<C, V>) -> Poly<C, V> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut acc: HashMap<Monomial<V>, C> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca.clone() * cb.clone();
                acc.entry(ma.mul(mb))
                    .and_modify(|c| *c = c.clone() + prod.clone())
                    .or_insert(prod);
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff, V: Vars> $tr for Poly<C, V> {
            type Output = Poly<C, V>;
            fn $f(self, rhs: Poly<C, V>) -> Poly<C, V> {
                (&self).$f(&rhs)
            }
        }
        impl<C: Coeff, V: Vars> $tr<&Poly<C, V>> for Poly<C, V> {
            type Output = Poly<C, V>;
            fn $f(self, rhs: &Poly<C, V>) -> Poly<C, V> {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff, V: Vars> Neg for Poly<C, V> {
    type Output = Poly<C, V>;
    fn neg(self) -> Poly<C, V> {
        -&self
    }
}

// -- display ------------------------------------------------------------

/// Writes `p` with `names` for variables, e.g. `9c1^2 - 27c2`.
fn write_poly<C: Coeff, V: Vars>(
    p: &Poly<C, V>,
    f: &mut fmt::Formatter<'_>,
    names: &[&str],
    latex: bool,
) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    for (idx, (m, c)) in p.terms().enumerate() {
        let s = c.to_string();
        let (neg, mag) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, s),
        };
        match (idx, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let is_const = m.is_one();
        let mag = if latex && mag.contains('/') {
            let (n, d) = mag.split_once('/').unwrap();
            format!("\\frac{{{n}}}{{{d}}}")
        } else {
            mag
        };
        if is_const || mag != "1" {
            write!(f, "{mag}")?;
        }
        let mut first = true;
        for k in 0..V::arity() {
            let e = m.exp(k);
            if e == 0 {
                continue;
            }
            if !latex && !first {
                write!(f, "*")?;
            }
            first = false;
            match (e, latex) {
                (1, _) => write!(f, "{}", names[k])?,
                (_, true) => write!(f, "{}^{{{e}}}", names[k])?,
                (_, false) => write!(f, "{}^{e}", names[k])?,
            }
        }
    }
    Ok(())
}

impl<C: Coeff, V: Vars> fmt::Display for Poly<C, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(self, f, V::NAMES, false)
    }
}

impl<C: Coeff, V: Vars> fmt::Debug for Poly<C, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

/// LaTeX rendering adapter: `format!("{}", p.latex())`.
pub struct Latex<'a, C, V: Vars>(&'a Poly<C, V>);

impl<C: Coeff, V: Vars> Poly<C, V> {
    pub fn latex(&self) -> Latex<'_, C, V> {
        Latex(self)
    }
}

impl<C: Coeff, V: Vars> fmt::Display for Latex<'_, C, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(self.0, f, V::LATEX, true)
    }
}

// -- Chern helpers --------------------------------------------------------

impl<C: Coeff> Poly<C, Chern> {
    pub fn c1() -> Self {
        Self::var(Chern::C1)
    }

    pub fn c2() -> Self {
        Self::var(Chern::C2)
    }

    /// `coeff * c1^a * c2^b`.
    pub fn chern_term(coeff: C, a: u32, b: u32) -> Self {
        Self::term(coeff, Monomial::from_exponents(&[a, b]))
    }

    /// Parses sums like `"9c1^2 - 27c2"`, `"4*c1^3 - 6*c1*c2"`, `"3"`.
    pub fn parse(s: &str) -> Result<Self> {
        serial::parse_chern(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> ZChern {
        ZChern::parse(s).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&z("c1") * &z("c1"), z("c1^2"));
        assert_eq!(&z("c1 - c2") * &z("c1 + c2"), z("c1^2 - c2^2"));
        assert_eq!(&z("9c1^2 - 27c2") * &z("c2^2"), z("9c1^2c2^2 - 27c2^3"));
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(z("c1^2 - c2^2").exact_div(&z("c1 - c2")).unwrap(), z("c1 + c2"));
        assert_eq!(z("c1^2").exact_div(&z("c2")), Err(Error::NotDivisible));
        let a = &z("9c2 - 2c1^2") * &z("c2");
        assert_eq!(a, z("9c2^2 - 2c1^2c2"));
        assert_eq!(a.exact_div(&z("c2")).unwrap(), z("9c2 - 2c1^2"));
        // integer ring: 2c1 is not divisible by 4
        assert_eq!(z("2c1").exact_div(&z("4")), Err(Error::NotDivisible));
    }

    #[test]
    fn substitution_examples() {
        let h = WeightPoly::var(Weights::H);
        let two_l1 = WeightPoly::var(Weights::L1).scale(&crate::coeff::rat(2, 1));
        assert_eq!(h.pow(2).substitute(Weights::H, &two_l1), two_l1.pow(2));

        // H - (d+1)/2 c1 with d = 3 at H = 2c1 vanishes (c1 stands in as l1 here)
        let p = &h - &two_l1;
        assert!(p.substitute(Weights::H, &two_l1).is_zero());

        // h^2 - c1 h + c2 at h = 0, written over (H, h, l1, l2) with c1 -> l1, c2 -> l2
        let sh = WeightPoly::var(Weights::SMALL_H);
        let l1 = WeightPoly::var(Weights::L1);
        let l2 = WeightPoly::var(Weights::L2);
        let q = &(&sh.pow(2) - &(&l1 * &sh)) + &l2;
        assert_eq!(q.substitute(Weights::SMALL_H, &WeightPoly::zero()), l2);
    }

    #[test]
    fn grade_components() {
        let p = z("1 + c1 + c1^2 - c2");
        assert_eq!(p.grade_component(2), z("c1^2 - c2"));
        assert_eq!(z("3 + 3c1").grade_component(0), z("3"));
        assert_eq!(p.homogeneous_degree(), None);
        assert_eq!(z("c1^2 - c2").homogeneous_degree(), Some(2));
    }

    #[test]
    fn canonical_order_and_display() {
        let p = z("189c2^2 - 90c1^2c2 + 12c1^4");
        assert_eq!(p.to_string(), "12c1^4 - 90c1^2*c2 + 189c2^2");
        assert_eq!(p.latex().to_string(), "12c_1^{4} - 90c_1^{2}c_2 + 189c_2^{2}");
        assert_eq!(z("-c1 + 1").to_string(), "1 - c1");
    }

    #[test]
    fn demotion_is_checked() {
        let q = z("3c1").to_rational().scale(&crate::coeff::rat(1, 2));
        assert!(matches!(q.to_integer(), Err(Error::NonIntegral(_))));
        assert_eq!(q.scale(&crate::coeff::rat(2, 1)).to_integer().unwrap(), z("3c1"));
    }

    #[test]
    fn ratio_detection() {
        assert_eq!(z("27c1^2 - 27c2").ratio_to(&z("c1^2 - c2")), Some(BigInt::from(27)));
        assert_eq!(z("7c1^2 - 27c2").ratio_to(&z("c1^2 - c2")), None);
    }
}
