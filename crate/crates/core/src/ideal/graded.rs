//! Homogeneous ideals of `Z[c1, c2]` and `Q[c1, c2]` (`deg c1 = 1`,
//! `deg c2 = 2`), handled one degree at a time.
//!
//! The degree-`D` part of the ideal is spanned (over the coefficient ring)
//! by `m * g` for generators `g` and monomials `m` of complementary degree.
//! Membership of a homogeneous `p` of degree `D` is membership of its
//! coefficient vector in that span.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use super::lattice::{EchelonRing, Echelon};
use crate::error::{Error, Result};
use crate::poly::{Chern, Monomial, Poly};

/// Monomials `c1^(D-2b) c2^b`, indexed by `b`.
pub fn basis(deg: u32) -> Vec<Monomial<Chern>> {
    (0..=deg / 2).map(|b| Monomial::from_exponents(&[deg - 2 * b, b])).collect()
}

fn coords<C: EchelonRing>(p: &Poly<C, Chern>, deg: u32) -> Vec<C> {
    basis(deg).iter().map(|m| p.coeff(m)).collect()
}

/// One graded piece: the rows `m * g` and their echelon form.
#[derive(Clone, Debug)]
pub struct DegreeSlice<C> {
    pub degree: u32,
    /// `(generator index, multiplier monomial)` for each input row.
    pub provenance: Vec<(usize, Monomial<Chern>)>,
    pub echelon: Echelon<C>,
}

impl<C: EchelonRing> DegreeSlice<C> {
    pub fn dim(&self) -> usize {
        self.echelon.ncols
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }
}

/// `p = sum_j multipliers[j] * generators[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<C: EchelonRing> {
    pub multipliers: Vec<(usize, Poly<C, Chern>)>,
}

impl<C: EchelonRing> Certificate<C> {
    pub fn evaluate(&self, generators: &[Poly<C, Chern>]) -> Poly<C, Chern> {
        let mut acc = Poly::zero();
        for (j, m) in &self.multipliers {
            acc += &(m * &generators[*j]);
        }
        acc
    }
}

pub struct GradedIdeal<C: EchelonRing> {
    generators: Vec<Poly<C, Chern>>,
    cache: Mutex<HashMap<u32, Arc<DegreeSlice<C>>>>,
}

impl<C: EchelonRing> Clone for GradedIdeal<C> {
    fn clone(&self) -> Self {
        GradedIdeal::new(self.generators.clone()).expect("generators already validated")
    }
}

impl<C: EchelonRing> std::fmt::Debug for GradedIdeal<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedIdeal").field("ring", &C::RING).field("generators", &self.generators).finish()
    }
}

impl<C: EchelonRing> GradedIdeal<C> {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(generators: Vec<Poly<C, Chern>>) -> Result<Self> {
        let generators: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.iter().any(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous);
        }
        Ok(GradedIdeal { generators, cache: Mutex::new(HashMap::new()) })
    }

    pub fn generators(&self) -> &[Poly<C, Chern>] {
        &self.generators
    }

    fn build_slice(&self, deg: u32) -> DegreeSlice<C> {
        let mut provenance = Vec::new();
        let mut rows = Vec::new();
        for (j, g) in self.generators.iter().enumerate() {
            let e = g.homogeneous_degree().unwrap();
            if e > deg {
                continue;
            }
            for m in basis(deg - e) {
                rows.push(coords(&g.mul_monomial(&m), deg));
                provenance.push((j, m));
            }
        }
        let ncols = deg as usize / 2 + 1;
        DegreeSlice { degree: deg, provenance, echelon: Echelon::new(&rows, ncols) }
    }

    pub fn slice(&self, deg: u32) -> Arc<DegreeSlice<C>> {
        if let Some(s) = self.cache.lock().unwrap().get(&deg) {
            return s.clone();
        }
        let s = Arc::new(self.build_slice(deg));
        self.cache.lock().unwrap().entry(deg).or_insert(s).clone()
    }

    /// Fills the cache for the given degrees in parallel.
    pub fn precompute(&self, degrees: impl IntoIterator<Item = u32>) {
        let missing: Vec<u32> = {
            let cache = self.cache.lock().unwrap();
            degrees.into_iter().filter(|d| !cache.contains_key(d)).collect()
        };
        let built: Vec<_> = missing.par_iter().map(|&d| (d, Arc::new(self.build_slice(d)))).collect();
        let mut cache = self.cache.lock().unwrap();
        for (d, s) in built {
            cache.entry(d).or_insert(s);
        }
    }

    /// `Some(certificate)` if `p` lies in the ideal. The certificate is
    /// checked before it is returned.
    pub fn membership(&self, p: &Poly<C, Chern>) -> Result<Option<Certificate<C>>> {
        if p.is_zero() {
            return Ok(Some(Certificate { multipliers: Vec::new() }));
        }
        let deg = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let slice = self.slice(deg);
        let Some(coeffs) = slice.echelon.solve(&coords(p, deg)) else {
            return Ok(None);
        };
        let mut multipliers: Vec<(usize, Poly<C, Chern>)> = Vec::new();
        for (c, (j, m)) in coeffs.into_iter().zip(&slice.provenance) {
            if c.is_zero() {
                continue;
            }
            match multipliers.last_mut() {
                Some((last, poly)) if last == j => *poly += &Poly::term(c, *m),
                _ => multipliers.push((*j, Poly::term(c, *m))),
            }
        }
        let cert = Certificate { multipliers };
        if cert.evaluate(&self.generators) != *p {
            return Err(Error::DomainError("membership certificate failed re-verification".into()));
        }
        Ok(Some(cert))
    }

    pub fn contains(&self, p: &Poly<C, Chern>) -> Result<bool> {
        Ok(self.membership(p)?.is_some())
    }

    /// Every generator of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &GradedIdeal<C>) -> Result<bool> {
        other.precompute(self.generators.iter().filter_map(|g| g.homogeneous_degree()));
        let found: Vec<bool> = self
            .generators
            .par_iter()
            .map(|g| other.contains(g))
            .collect::<Result<_>>()?;
        Ok(found.into_iter().all(|b| b))
    }

    /// Degree-`D` pieces agree for every `D <= max_degree`.
    pub fn slices_equal(&self, other: &GradedIdeal<C>, max_degree: u32) -> bool {
        self.precompute(0..=max_degree);
        other.precompute(0..=max_degree);
        (0..=max_degree).all(|d| self.slice(d).echelon.same_span(&other.slice(d).echelon))
    }

    /// For each generator, whether it lies in the ideal of the others.
    pub fn redundant_generators(&self) -> Result<Vec<bool>> {
        (0..self.generators.len())
            .into_par_iter()
            .map(|j| {
                let rest: Vec<_> = self
                    .generators
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, g)| g.clone())
                    .collect();
                GradedIdeal::new(rest)?.contains(&self.generators[j])
            })
            .collect()
    }
}

/// The two ideals have the same generators up to membership both ways.
pub fn ideal_equal<C: EchelonRing>(a: &GradedIdeal<C>, b: &GradedIdeal<C>) -> Result<bool> {
    Ok(a.is_subset_of(b)? && b.is_subset_of(a)?)
}
