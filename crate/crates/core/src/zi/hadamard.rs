//! An independent route to `alpha_{i,0}^{r,d}` for all `i` at once.
//!
//! The weight factor of coordinate `m` at `H = (d+1)/2 c1` is
//! `c1/2 + (m - d/2) delta` with `delta = l2 - l1`. The `(r+1)`-st Hadamard
//! power of the coefficient array of
//!
//! ```text
//! sum_{mu,nu} (-1)^mu / (mu! nu!) prod_{k<mu} F_k prod_{m<nu} G_m  x^mu y^nu
//! ```
//!
//! with `F_k = c1/2 + (k - d/2) delta`, `G_m = c1/2 + (d/2 - m) delta`,
//! collected along the antidiagonal `mu + nu = i` and divided by
//! `delta^i`, gives `alpha_{i,0}`. The result is even in `delta` and is
//! rewritten through `delta^2 = c1^2 - 4 c2`.

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::{factorial, rat, Rat};
use crate::error::{require_odd, Error, Result};
use crate::poly::{Delta, Monomial, Poly, QChern, ZChern};

type DeltaPoly = Poly<Rat, Delta>;

fn linear(c1: Rat, delta: Rat) -> DeltaPoly {
    Poly::from_terms([(c1, vec![1, 0]), (delta, vec![0, 1])])
}

/// Prefix products `[1, f(0), f(0) f(1), ...]` up to length `n + 1`.
fn prefix_products(n: u32, f: impl Fn(u32) -> DeltaPoly) -> Vec<DeltaPoly> {
    let mut out = vec![DeltaPoly::one()];
    for k in 0..n {
        let next = &out[k as usize] * &f(k);
        out.push(next);
    }
    out
}

/// `c1^a delta^(2b) -> c1^a (c1^2 - 4 c2)^b`. Odd powers of `delta` mean the
/// input was not symmetric.
fn to_chern(p: &DeltaPoly) -> Result<QChern> {
    let disc = QChern::parse("c1^2 - 4c2")?;
    let mut out = QChern::zero();
    for (m, c) in p.terms() {
        let (a, e) = (m.exp(Delta::C1), m.exp(Delta::DELTA));
        if e % 2 == 1 {
            return Err(Error::NotSymmetric);
        }
        let t = Poly::term(c.clone(), Monomial::from_exponents(&[a, 0]));
        out += &(&t * &disc.pow(e / 2));
    }
    Ok(out)
}

/// `[alpha_{0,0}, alpha_{1,0}, ..., alpha_{d,0}]` at `(r, d)`, where the
/// `i = 0` entry is `1`.
pub fn hadamard_alpha0(r: u32, d: u32) -> Result<Vec<ZChern>> {
    require_odd(d)?;
    let half = rat(1, 2);
    let dh = rat(d as i64, 2);
    let f = prefix_products(d, |k| linear(half.clone(), Rat::from_integer(k.into()) - &dh));
    let g = prefix_products(d, |m| linear(half.clone(), &dh - Rat::from_integer(m.into())));

    let delta = DeltaPoly::var(Delta::DELTA);
    let mut out = Vec::with_capacity(d as usize + 1);
    for i in 0..=d {
        let mut acc = DeltaPoly::zero();
        for mu in 0..=i {
            let nu = i - mu;
            let mut c = Rat::new(BigInt::one(), factorial(mu) * factorial(nu));
            if mu % 2 == 1 {
                c = -c;
            }
            let a = &f[mu as usize] * &g[nu as usize];
            acc += &a.pow(r + 1).scale(&c);
        }
        let mut q = acc;
        for _ in 0..i {
            q = q.exact_div(&delta)?;
        }
        out.push(to_chern(&q)?.to_integer()?);
    }
    debug_assert!(out[0].is_one());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::binomial;

    #[test]
    fn twisted_cubic() {
        let a = hadamard_alpha0(2, 3).unwrap();
        assert_eq!(a[2], ZChern::parse("12c1^4 - 90c1^2c2 + 189c2^2").unwrap());
        assert_eq!(a[3], ZChern::parse("4c1^6 - 42c1^4c2 + 129c1^2c2^2 - 90c2^3").unwrap());
    }

    #[test]
    fn r_zero_binomials() {
        let a = hadamard_alpha0(0, 5).unwrap();
        for (i, p) in a.iter().enumerate() {
            assert_eq!(*p, ZChern::constant(binomial(5, i as u32)));
        }
    }

    #[test]
    fn rejects_even_degree() {
        assert_eq!(hadamard_alpha0(1, 2), Err(Error::EvenDegree(2)));
    }

    #[test]
    fn delta_conversion() {
        let sq = DeltaPoly::var(Delta::DELTA).pow(2);
        assert_eq!(to_chern(&sq).unwrap(), QChern::parse("c1^2 - 4c2").unwrap());
        assert_eq!(to_chern(&DeltaPoly::var(Delta::DELTA)), Err(Error::NotSymmetric));
        assert!(to_chern(&DeltaPoly::zero()).unwrap().is_zero());
    }
}
