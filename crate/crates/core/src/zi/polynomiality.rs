//! For fixed `i` and `r`, each coefficient of `alpha_{i,0}^{r,d}` in the
//! monomial basis `c1^a c2^b` is a polynomial in `d` of degree at most
//! `i (r + 1)`. Checked by interpolating over the first `i(r+1) + 1` odd
//! `d >= i` and testing further odd `d`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::alpha_i0;
use crate::coeff::Rat;
use crate::error::{Error, Result};
use crate::poly::{DegreeSymbol, Poly, ZChern};

pub type DPoly = Poly<Rat, DegreeSymbol>;

/// Number of extra odd `d` at which the interpolants are tested.
pub const EXTRA_POINTS: usize = 2;

#[derive(Clone, Debug)]
pub struct PolyInD {
    pub i: u32,
    pub r: u32,
    pub degree_bound: u32,
    /// Interpolation nodes followed by the test points.
    pub nodes: Vec<u32>,
    pub test_points: Vec<u32>,
    /// Interpolant of each coefficient, keyed by `(a, b)` for `c1^a c2^b`.
    pub coefficients: BTreeMap<(u32, u32), DPoly>,
    pub max_degree: u32,
    pub holds: bool,
}

/// Lagrange interpolation over `Q`.
pub fn interpolate(points: &[(Rat, Rat)]) -> DPoly {
    let x = DPoly::var(0);
    let mut out = DPoly::zero();
    for (j, (xj, yj)) in points.iter().enumerate() {
        if yj.is_zero() {
            continue;
        }
        let mut basis = DPoly::one();
        let mut denom = Rat::one();
        for (m, (xm, _)) in points.iter().enumerate() {
            if m != j {
                basis = &basis * &(&x - &DPoly::constant(xm.clone()));
                denom *= xj - xm;
            }
        }
        out += &basis.scale(&(yj / denom));
    }
    out
}

pub fn eval(p: &DPoly, x: &Rat) -> Rat {
    p.terms().fold(Rat::zero(), |acc, (m, c)| {
        let mut t = c.clone();
        for _ in 0..m.exp(0) {
            t *= x;
        }
        acc + t
    })
}

fn coeff_map(p: &ZChern) -> BTreeMap<(u32, u32), Rat> {
    p.terms()
        .map(|(m, c)| ((m.exp(0), m.exp(1)), Rat::from_integer(c.clone())))
        .collect()
}

pub fn poly_in_d_check(i: u32, r: u32) -> Result<PolyInD> {
    if i == 0 {
        return Err(Error::IndexError("polynomiality in d needs i >= 1".into()));
    }
    let degree_bound = i * (r + 1);
    let n = degree_bound as usize + 1;
    let first = if i % 2 == 1 { i } else { i + 1 };
    let all: Vec<u32> = (0..n + EXTRA_POINTS).map(|k| first + 2 * k as u32).collect();
    let values: Vec<BTreeMap<(u32, u32), Rat>> = all
        .par_iter()
        .map(|&d| alpha_i0(i, r, d).map(|a| coeff_map(&a)))
        .collect::<Result<_>>()?;

    let mut keys: Vec<(u32, u32)> = values.iter().flat_map(|m| m.keys().copied()).collect();
    keys.sort_unstable();
    keys.dedup();

    let value_at = |k: usize, key: &(u32, u32)| values[k].get(key).cloned().unwrap_or_else(Rat::zero);
    let mut coefficients = BTreeMap::new();
    let mut holds = true;
    for key in keys {
        let pts: Vec<(Rat, Rat)> = (0..n)
            .map(|k| (Rat::from_integer(all[k].into()), value_at(k, &key)))
            .collect();
        let p = interpolate(&pts);
        for k in n..all.len() {
            if eval(&p, &Rat::from_integer(all[k].into())) != value_at(k, &key) {
                holds = false;
            }
        }
        coefficients.insert(key, p);
    }
    let max_degree = coefficients.values().filter_map(|p| p.max_degree()).max().unwrap_or(0);
    holds &= max_degree <= degree_bound;
    Ok(PolyInD {
        i,
        r,
        degree_bound,
        nodes: all[..n].to_vec(),
        test_points: all[n..].to_vec(),
        coefficients,
        max_degree,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    #[test]
    fn lagrange_recovers_a_quadratic() {
        let pts: Vec<_> = [1i64, 3, 5].iter().map(|&x| (rat(x, 1), rat(x * x - 2 * x, 1))).collect();
        let p = interpolate(&pts);
        assert_eq!(eval(&p, &rat(7, 1)), rat(35, 1));
        assert_eq!(p.max_degree(), Some(2));
    }

    #[test]
    fn alpha_10_is_polynomial_in_d() {
        let res = poly_in_d_check(1, 1).unwrap();
        assert!(res.holds);
        assert_eq!(res.nodes, vec![1, 3, 5]);
        assert_eq!(res.test_points, vec![7, 9]);
        // alpha_{1,0}^{0,d} = d
        let r0 = poly_in_d_check(1, 0).unwrap();
        assert_eq!(r0.coefficients[&(0, 0)], DPoly::var(0));
    }

    #[test]
    fn alpha_20_is_polynomial_in_d() {
        assert!(poly_in_d_check(2, 1).unwrap().holds);
    }
}
