//! Torus-weight workspace.
//!
//! Polynomials here live in `Q[H, h, l1, l2]`. The Chern classes are tied to
//! the weights by `c1 = -(l1 + l2)`, `c2 = l1 l2`, and the hyperplane class is
//! eliminated through `H = (d+1)/2 c1`.

use num_bigint::BigInt;
use num_traits::One;

use crate::coeff::{Coeff, Int};
use crate::error::{require_odd, Error, Result};
use crate::poly::{Chern, Monomial, Poly, Weights, ZChern};

/// `X + (deg - m) l1 + m l2`, the weight factor of the monomial
/// `x^(deg-m) y^m` shifted by the class `X` (either `H` or `h`).
pub fn weight_factor<C: Coeff>(class_var: usize, deg: u32, m: u32) -> Poly<C, Weights> {
    Poly::from_terms([
        (C::one(), unit(class_var)),
        (C::from_i64((deg - m) as i64), unit(Weights::L1)),
        (C::from_i64(m as i64), unit(Weights::L2)),
    ])
}

fn unit(var: usize) -> Vec<u32> {
    let mut e = vec![0; 4];
    e[var] = 1;
    e
}

/// `P_{r,d}(H) = prod_{k=0..d} (H + (d-k) l1 + k l2)^(r+1)`, expanded.
pub fn build_p<C: Coeff>(r: u32, d: u32) -> Poly<C, Weights> {
    let base = Poly::product(&(0..=d).map(|k| weight_factor::<C>(Weights::H, d, k)).collect::<Vec<_>>());
    base.pow(r + 1)
}

/// `P_{a,k}(X) = prod_{s=0..k-1} (X + (a-s) l1 + s l2)`: the class of the
/// degree-`a` forms divisible by `y^k`.
pub fn divisible_locus<C: Coeff>(class_var: usize, a: u32, k: u32) -> Poly<C, Weights> {
    Poly::product(&(0..k).map(|s| weight_factor::<C>(class_var, a, s)).collect::<Vec<_>>())
}

/// The value of `H` on the stack: `(d+1)/2 c1 = -(d+1)/2 (l1 + l2)`.
pub fn h_value<C: Coeff>(d: u32) -> Result<Poly<C, Weights>> {
    require_odd(d)?;
    let s = C::from_i64(-(d.div_ceil(2) as i64));
    Ok(Poly::from_terms([(s.clone(), unit(Weights::L1)), (s, unit(Weights::L2))]))
}

/// Eliminates `H` through `H = (d+1)/2 c1`. Even `d` is refused.
pub fn specialize_h<C: Coeff>(p: &Poly<C, Weights>, d: u32) -> Result<Poly<C, Weights>> {
    Ok(p.substitute(Weights::H, &h_value(d)?))
}

/// Rewrites a symmetric polynomial in `l1, l2` in terms of `c1, c2`.
///
/// Gauss's algorithm: repeatedly take the term `l1^a l2^b` with the largest
/// `l1`-exponent in the lowest remaining degree and subtract the matching
/// multiple of `(l1+l2)^(a-b) (l1 l2)^b`, which is `(-c1)^(a-b) c2^b`.
pub fn symmetrize_to_chern<C: Coeff>(p: &Poly<C, Weights>) -> Result<Poly<C, Chern>> {
    if p.involves(Weights::H) || p.involves(Weights::SMALL_H) {
        return Err(Error::DomainError("symmetrization expects a polynomial in l1, l2 only".into()));
    }
    if p.swap_vars(Weights::L1, Weights::L2) != *p {
        return Err(Error::NotSymmetric);
    }
    let mut rest = p.clone();
    let mut out = Poly::<C, Chern>::zero();
    loop {
        let Some((m, c)) = rest.terms().next().map(|(m, c)| (*m, c.clone())) else {
            break;
        };
        let (a, b) = (m.exp(Weights::L1), m.exp(Weights::L2));
        if a < b {
            // cannot happen for symmetric input
            return Err(Error::NotSymmetric);
        }
        let n = a - b;
        let sign = if n % 2 == 0 { c.clone() } else { -c.clone() };
        out.add_term(Monomial::from_exponents(&[n, b]), sign);
        let mut binom = BigInt::one();
        for t in 0..=n {
            let mono = Monomial::from_exponents(&[0, 0, t + b, n - t + b]);
            rest.add_term(mono, -(c.clone() * C::from_int(&binom)));
            binom = binom * (n - t) / (t + 1);
        }
    }
    Ok(out)
}

/// Exact division by `(l2 - l1)^i`.
pub fn divide_by_weight_diff<C: Coeff>(p: &Poly<C, Weights>, i: u32) -> Result<Poly<C, Weights>> {
    let diff = weight_diff::<C>();
    let mut q = p.clone();
    for _ in 0..i {
        q = q.exact_div(&diff)?;
    }
    Ok(q)
}

/// `l2 - l1`.
pub fn weight_diff<C: Coeff>() -> Poly<C, Weights> {
    Poly::from_terms([(C::one(), unit(Weights::L2)), (-C::one(), unit(Weights::L1))])
}

/// `d^2 c2 - (d^2 - 1)/4 c1^2`, the class of `(H + d l1)(H + d l2)` at
/// `H = (d+1)/2 c1`.
pub fn edge_factor(d: u32) -> Result<ZChern> {
    require_odd(d)?;
    let d = BigInt::from(d);
    let sq = &d * &d;
    Ok(ZChern::from_terms([
        (sq.clone(), vec![0, 1]),
        (-((&sq - 1u32) / 4u32), vec![2, 0]),
    ]))
}

/// `P_d = P_{0,d}((d+1)/2 c1)` as a Chern polynomial, with `P_{-1} = 1`.
/// `d` is passed as a signed value so the convention at `-1` is expressible.
pub fn p_d(d: i64) -> Result<ZChern> {
    if d == -1 {
        return Ok(ZChern::one());
    }
    if d < 0 {
        return Err(Error::DomainError(format!("P_d undefined for d = {d}")));
    }
    let d = d as u32;
    let p = specialize_h(&build_p::<Int>(0, d), d)?;
    symmetrize_to_chern(&p)
}

/// Symmetrized `P_{r,d}((d+1)/2 c1)`.
pub fn p_rd_chern(r: u32, d: u32) -> Result<ZChern> {
    // specialize each factor before multiplying; cheaper than expanding in H
    let hv = h_value::<Int>(d)?;
    let factors: Vec<_> = (0..=d)
        .map(|k| weight_factor::<Int>(Weights::H, d, k).substitute(Weights::H, &hv))
        .collect();
    symmetrize_to_chern(&Poly::product(&factors).pow(r + 1))
}

/// Number of times `f` divides `p` exactly. `f` must not be a constant.
pub fn multiplicity<C: Coeff, V: crate::poly::Vars>(p: &Poly<C, V>, f: &Poly<C, V>) -> u32 {
    assert!(f.max_degree().unwrap_or(0) > 0, "multiplicity of a constant");
    let mut count = 0;
    let mut q = p.clone();
    while !q.is_zero() {
        match q.exact_div(f) {
            Ok(next) => {
                q = next;
                count += 1;
            }
            Err(_) => break,
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, Rat};
    use crate::poly::{QChern, WeightPoly};

    fn l1() -> WeightPoly {
        WeightPoly::var(Weights::L1)
    }
    fn l2() -> WeightPoly {
        WeightPoly::var(Weights::L2)
    }
    fn big_h() -> WeightPoly {
        WeightPoly::var(Weights::H)
    }

    #[test]
    fn build_p_small_cases() {
        let f0 = &big_h() + &l1();
        let f1 = &big_h() + &l2();
        assert_eq!(build_p::<Rat>(0, 1), &f0 * &f1);
        assert_eq!(build_p::<Rat>(1, 1), (&f0 * &f1).pow(2));
        let two = rat(2, 1);
        let g0 = &big_h() + &l1().scale(&two);
        let g1 = &(&big_h() + &l1()) + &l2();
        let g2 = &big_h() + &l2().scale(&two);
        assert_eq!(build_p::<Rat>(0, 2), Poly::product([&g0, &g1, &g2]));
        assert_eq!(build_p::<Rat>(2, 3).homogeneous_degree(), Some(12));
    }

    #[test]
    fn specialization_examples() {
        let p = specialize_h(&build_p::<Rat>(0, 1), 1).unwrap();
        assert_eq!(p, &l1() * &l2());
        assert_eq!(symmetrize_to_chern(&p).unwrap(), QChern::c2());

        let h = specialize_h(&big_h(), 3).unwrap();
        assert_eq!(h, (&l1() + &l2()).scale(&rat(-2, 1)));

        let p3 = specialize_h(&build_p::<Rat>(0, 3), 3).unwrap();
        assert_eq!(symmetrize_to_chern(&p3).unwrap(), QChern::parse("9c2^2 - 2c1^2c2").unwrap());

        assert_eq!(specialize_h(&big_h(), 4), Err(Error::EvenDegree(4)));
    }

    #[test]
    fn symmetrization_examples() {
        assert_eq!(symmetrize_to_chern(&(&l1() + &l2())).unwrap(), QChern::parse("-c1").unwrap());
        let sq = &l1().pow(2) + &l2().pow(2);
        assert_eq!(symmetrize_to_chern(&sq).unwrap(), QChern::parse("c1^2 - 2c2").unwrap());
        assert_eq!(symmetrize_to_chern(&(&l1() - &l2())), Err(Error::NotSymmetric));
        assert!(matches!(symmetrize_to_chern(&big_h()), Err(Error::DomainError(_))));
    }

    #[test]
    fn weight_diff_division_examples() {
        let sq = &(&l1().pow(2) - &(&l1() * &l2()).scale(&rat(2, 1))) + &l2().pow(2);
        assert!(divide_by_weight_diff(&sq, 2).unwrap().is_one());
        assert!(divide_by_weight_diff(&(&l2() - &l1()), 1).unwrap().is_one());
        assert_eq!(divide_by_weight_diff(&(&l1() + &l2()), 1), Err(Error::NotDivisible));
    }

    #[test]
    fn p_d_values() {
        assert!(p_d(-1).unwrap().is_one());
        assert_eq!(p_d(1).unwrap(), ZChern::c2());
        assert_eq!(p_d(3).unwrap(), ZChern::parse("9c2^2 - 2c1^2c2").unwrap());
        assert_eq!(edge_factor(3).unwrap(), ZChern::parse("9c2 - 2c1^2").unwrap());
        assert_eq!(edge_factor(1).unwrap(), ZChern::c2());
    }

    #[test]
    fn edge_factor_divides_p_rd_r_plus_one_times() {
        for d in [3u32, 5] {
            for r in 0..3 {
                let p = p_rd_chern(r, d).unwrap();
                assert_eq!(multiplicity(&p, &edge_factor(d).unwrap()), r + 1, "r={r} d={d}");
            }
        }
    }

    #[test]
    fn factor_specialization_matches_full_pipeline() {
        let full = symmetrize_to_chern(&specialize_h(&build_p::<Int>(1, 3), 3).unwrap()).unwrap();
        assert_eq!(full, p_rd_chern(1, 3).unwrap());
    }
}
