//! The `i = 1` relations `alpha_{1,0}^{r,d}`, `alpha_{1,1}^{r,d}` by
//! generating function and by linear recursion in `r`.

pub mod remainder;
pub mod pullback;

use crate::coeff::Int;
use crate::error::{require_odd, Error, Result};
use crate::poly::{Chern, TruncatedSeries, ZChern};

pub use remainder::{remainder_quotients, functional_equation_holds, RemainderQuotients};
pub use pullback::{phi_pullback_check, PullbackReport};

type ZSeries = TruncatedSeries<Int, Chern>;

fn lin(c: i64, c1: i64, c2: i64) -> ZChern {
    ZChern::from_terms([
        (Int::from(c), vec![0, 0]),
        (Int::from(c1), vec![1, 0]),
        (Int::from(c2), vec![0, 1]),
    ])
}

/// `(1 + (d-1)/2 c1)(1 - (d+1)/2 c1) + d^2 c2`.
pub fn genfun_denominator(d: u32) -> Result<ZChern> {
    require_odd(d)?;
    let (lo, hi) = (((d - 1) / 2) as i64, d.div_ceil(2) as i64);
    Ok(&(&lin(1, lo, 0) * &lin(1, -hi, 0)) + &lin(0, 0, (d as i64) * (d as i64)))
}

/// Numerator of the series `sum_r alpha_{1,k}^{r,d}` over the common
/// denominator: `d` for `k = 0`, `1 + (d-1)/2 c1 - den` for `k = 1`.
pub fn genfun_numerator(k: u32, d: u32) -> Result<ZChern> {
    require_odd(d)?;
    match k {
        0 => Ok(ZChern::from_i64(d as i64)),
        1 => Ok(&lin(1, ((d - 1) / 2) as i64, 0) - &genfun_denominator(d)?),
        _ => Err(Error::IndexError(format!("k = {k} is not 0 or 1"))),
    }
}

/// The series `sum_r alpha_{1,k}^{r,d}` truncated at `bound`.
pub fn genfun_series(k: u32, d: u32, bound: u32) -> Result<ZSeries> {
    let inv = ZSeries::new(genfun_denominator(d)?, bound).invert()?;
    Ok(ZSeries::new(genfun_numerator(k, d)?, bound).mul(&inv))
}

/// `alpha_{1,k}^{r,d}` as the degree-`(r+k)` part of the series.
pub fn genfun_alpha1(k: u32, r: u32, d: u32) -> Result<ZChern> {
    genfun_alpha1_bounded(k, r, d, r + 1)
}

/// As [`genfun_alpha1`] with an explicit truncation bound `>= r + k`.
pub fn genfun_alpha1_bounded(k: u32, r: u32, d: u32, bound: u32) -> Result<ZChern> {
    if bound < r + k {
        return Err(Error::DomainError(format!("truncation bound {bound} below degree {}", r + k)));
    }
    Ok(genfun_series(k, d, bound)?.component(r + k))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Z1Path {
    GenFun,
    Recursion,
}

/// The pair `(alpha_{1,0}^{r,d}, alpha_{1,1}^{r,d})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z1Pair {
    pub a10: ZChern,
    pub a11: ZChern,
    pub r: u32,
    pub d: u32,
    pub path: Z1Path,
}

impl Z1Pair {
    pub fn compute(r: u32, d: u32, path: Z1Path) -> Result<Self> {
        let (a10, a11) = match path {
            Z1Path::GenFun => (genfun_alpha1(0, r, d)?, genfun_alpha1(1, r, d)?),
            Z1Path::Recursion => recursion_table(r, d)?.pop().unwrap(),
        };
        Ok(Z1Pair { a10, a11, r, d, path })
    }
}

/// All pairs for `r = 0..=r_max` by the recursion
///
/// ```text
/// a10' = (1-d)/2 c1 a10 + d a11
/// a11' = -d c2 a10 + (d+1)/2 c1 a11
/// ```
///
/// from `a10 = d`, `a11 = (d+1)/2 c1` at `r = 0`.
pub fn recursion_table(r_max: u32, d: u32) -> Result<Vec<(ZChern, ZChern)>> {
    require_odd(d)?;
    let d_i = d as i64;
    let lo = lin(0, (1 - d_i) / 2, 0);
    let hi = lin(0, (d_i + 1) / 2, 0);
    let dc2 = lin(0, 0, -d_i);
    let dd = ZChern::from_i64(d_i);
    let mut out = vec![(dd.clone(), hi.clone())];
    for _ in 0..r_max {
        let (a10, a11) = out.last().unwrap();
        let next10 = &(&lo * a10) + &(&dd * a11);
        let next11 = &(&dc2 * a10) + &(&hi * a11);
        out.push((next10, next11));
    }
    Ok(out)
}

/// `alpha_{1,k}^{r,d}` by the recursion.
pub fn recursion_alpha1(k: u32, r: u32, d: u32) -> Result<ZChern> {
    if k > 1 {
        return Err(Error::IndexError(format!("k = {k} is not 0 or 1")));
    }
    let (a10, a11) = recursion_table(r, d)?.pop().unwrap();
    Ok(if k == 0 { a10 } else { a11 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> ZChern {
        ZChern::parse(s).unwrap()
    }

    #[test]
    fn twisted_cubic() {
        assert_eq!(genfun_alpha1(0, 2, 3).unwrap(), z("9c1^2 - 27c2"));
        assert_eq!(genfun_alpha1(1, 2, 3).unwrap(), z("8c1^3 - 27c1c2"));
        let p = Z1Pair::compute(2, 3, Z1Path::Recursion).unwrap();
        assert_eq!(p.a10, z("9c1^2 - 27c2"));
        assert_eq!(p.a11, z("8c1^3 - 27c1c2"));
        assert_eq!(genfun_alpha1(1, 1, 3).unwrap(), z("4c1^2 - 9c2"));
        assert_eq!(recursion_alpha1(0, 1, 3).unwrap(), z("3c1"));
        assert_eq!(recursion_alpha1(1, 1, 3).unwrap(), z("4c1^2 - 9c2"));
    }

    #[test]
    fn grassmannian_case() {
        assert_eq!(genfun_alpha1(0, 3, 1).unwrap(), z("c1^3 - 2c1c2"));
        assert_eq!(genfun_alpha1(1, 3, 1).unwrap(), z("c1^4 - 3c1^2c2 + c2^2"));
    }

    #[test]
    fn initial_values() {
        assert_eq!(genfun_alpha1(0, 0, 5).unwrap(), z("5"));
        assert_eq!(genfun_alpha1(1, 0, 5).unwrap(), z("3c1"));
        assert_eq!(recursion_alpha1(1, 0, 5).unwrap(), z("3c1"));
    }

    #[test]
    fn paths_agree() {
        for d in [1u32, 3, 5, 7] {
            let table = recursion_table(6, d).unwrap();
            for (r, (a10, a11)) in table.iter().enumerate() {
                let r = r as u32;
                assert_eq!(&genfun_alpha1(0, r, d).unwrap(), a10, "r={r} d={d}");
                assert_eq!(&genfun_alpha1(1, r, d).unwrap(), a11, "r={r} d={d}");
            }
        }
    }

    #[test]
    fn larger_bound_changes_nothing() {
        assert_eq!(genfun_alpha1_bounded(0, 3, 5, 10).unwrap(), genfun_alpha1(0, 3, 5).unwrap());
        assert!(genfun_alpha1_bounded(1, 3, 5, 3).is_err());
    }

    #[test]
    fn errors() {
        assert_eq!(genfun_alpha1(0, 1, 2), Err(Error::EvenDegree(2)));
        assert!(matches!(genfun_numerator(2, 3), Err(Error::IndexError(_))));
        assert_eq!(recursion_alpha1(0, 1, 4), Err(Error::EvenDegree(4)));
        assert!(matches!(recursion_alpha1(2, 1, 3), Err(Error::IndexError(_))));
    }
}
