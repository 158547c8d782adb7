//! The full family `alpha_{i,k}^{r,d}` and the generating sets built from it.

use rayon::prelude::*;

use crate::error::{require_odd, Error, Result};
use crate::ideal::lucas::{prime_divisors, prime_power_base};
use crate::paths::PathRegistry;
use crate::poly::ZChern;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub i: u32,
    pub k: u32,
    pub poly: ZChern,
    pub path: &'static str,
    /// Name of the oracle path that reproduced the value, if one ran.
    pub checked_by: Option<&'static str>,
}

impl Relation {
    pub fn degree(&self, r: u32) -> u32 {
        self.i * r + self.k
    }

    pub fn label(&self) -> String {
        format!("alpha_{{{},{}}}", self.i, self.k)
    }
}

/// Computes one relation by its production path, optionally confirming it
/// with the oracle path.
pub fn compute_relation(reg: &PathRegistry, i: u32, k: u32, r: u32, d: u32, check: bool) -> Result<Relation> {
    require_odd(d)?;
    if i == 0 || i > d || k > i {
        return Err(Error::IndexError(format!("need 1 <= i <= d and k <= i, got i = {i}, k = {k}, d = {d}")));
    }
    let prod = reg.production_for(i, k)?;
    let poly = prod.compute(i, k, r, d)?;
    let mut checked_by = None;
    if check {
        if let Some(oracle) = reg.oracle_for(i, k) {
            let other = oracle.compute(i, k, r, d)?;
            if other != poly {
                return Err(Error::IdentityViolated {
                    d,
                    what: format!(
                        "alpha_{{{i},{k}}} at r = {r}: {} gives {poly}, {} gives {other}",
                        prod.name(),
                        oracle.name()
                    ),
                });
            }
            checked_by = Some(oracle.name());
        }
    }
    Ok(Relation { i, k, poly, path: prod.name(), checked_by })
}

/// Indices `(i, k)` with `1 <= i <= d`, `0 <= k <= i`, in lexicographic order.
pub fn all_indices(d: u32) -> Vec<(u32, u32)> {
    (1..=d).flat_map(|i| (0..=i).map(move |k| (i, k))).collect()
}

/// `alpha_{1,0}`, `alpha_{1,1}`, and `alpha_{q,0}` for prime powers `q <= d`.
pub fn reduced_indices(d: u32) -> Vec<(u32, u32)> {
    let mut out = vec![(1, 0), (1, 1)];
    out.extend((2..=d).filter(|&q| prime_power_base(q).is_some()).map(|q| (q, 0)));
    out
}

/// `alpha_{1,0}`, `alpha_{1,1}`, and `alpha_{p,0}` for primes `p | d`.
pub fn conjectural_indices(d: u32) -> Vec<(u32, u32)> {
    let mut out = vec![(1, 0), (1, 1)];
    out.extend(prime_divisors(d).into_iter().map(|p| (p, 0)));
    out
}

#[derive(Clone, Debug)]
pub struct RelationSet {
    pub r: u32,
    pub d: u32,
    /// Sorted by `(i, k)`.
    pub relations: Vec<Relation>,
}

impl RelationSet {
    /// Computes the given indices in parallel; the result order is the
    /// sorted index order regardless of scheduling.
    pub fn compute_indices(
        reg: &PathRegistry,
        r: u32,
        d: u32,
        indices: &[(u32, u32)],
        check: bool,
    ) -> Result<Self> {
        require_odd(d)?;
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let relations = idx
            .par_iter()
            .map(|&(i, k)| compute_relation(reg, i, k, r, d, check))
            .collect::<Result<Vec<_>>>()?;
        Ok(RelationSet { r, d, relations })
    }

    pub fn full(reg: &PathRegistry, r: u32, d: u32, check: bool) -> Result<Self> {
        Self::compute_indices(reg, r, d, &all_indices(d), check)
    }

    pub fn reduced(reg: &PathRegistry, r: u32, d: u32, check: bool) -> Result<Self> {
        Self::compute_indices(reg, r, d, &reduced_indices(d), check)
    }

    pub fn get(&self, i: u32, k: u32) -> Option<&Relation> {
        self.relations
            .binary_search_by_key(&(i, k), |rel| (rel.i, rel.k))
            .ok()
            .map(|n| &self.relations[n])
    }

    /// The polynomials at the given indices, in the order given.
    pub fn select(&self, indices: &[(u32, u32)]) -> Vec<ZChern> {
        indices
            .iter()
            .map(|&(i, k)| self.get(i, k).expect("index not computed").poly.clone())
            .collect()
    }

    pub fn polys(&self) -> Vec<ZChern> {
        self.relations.iter().map(|rel| rel.poly.clone()).collect()
    }
}
