//! Equivariant pushforward along `pi_i : P(W_i) x P(W_{d-i}^{r+1}) -> P(W_d^{r+1})`
//! by localization on the left factor.
//!
//! The class `q(h)` on `P(W_i)` is written as a sum over the torus-fixed
//! points `q_j` (only the coordinate of `x^(i-j) y^j` nonzero):
//!
//! ```text
//! q(h) = sum_j q(rho_j) [q_j] / e_j,   e_j = (-1)^j j! (i-j)! (l2 - l1)^i
//! ```
//!
//! and `q_j x P(W_{d-i}^{r+1})` pushes forward to the coordinate subspace of
//! tuples divisible by `x^(i-j) y^j`, whose class is the product of the
//! weight factors `(H + (d-m) l1 + m l2)^(r+1)` over the vanishing coordinates
//! `m < j` and `m > d-i+j`.
//!
//! All bookkeeping is done over `Z`: the sum is formed with binomials
//! `C(i, j)` in place of `1/(j!(i-j)!)`, the common denominator
//! `(l2 - l1)^i` is cleared by exact division, and only the final `1/i!`
//! (times the lcm of `q`'s denominators) is applied over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::coeff::{binomial, factorial, Int};
use crate::error::{require_odd, Error, Result};
use crate::poly::{Poly, WeightPoly, Weights, ZWeightPoly};
use crate::weight::{divide_by_weight_diff, h_value, weight_diff, weight_factor};

/// Sign convention for the restriction `rho_j` of the left hyperplane class
/// `h` to the fixed point `q_j`: `rho_j = -/+ ((i-j) l1 + j l2)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum RestrictionSign {
    Negative,
    Positive,
}

/// The convention in force. `Negative` is the one for which the `i = 1`
/// pushforwards agree with the generating-function relations.
pub const PINNED_SIGN: RestrictionSign = RestrictionSign::Negative;

/// `rho_j` for the fixed point `q_j` of `P(W_i)`.
pub fn fixed_point_restriction(i: u32, j: u32, sign: RestrictionSign) -> ZWeightPoly {
    let w = &weight_factor::<Int>(Weights::H, i, j) - &ZWeightPoly::var(Weights::H);
    match sign {
        RestrictionSign::Negative => -w,
        RestrictionSign::Positive => w,
    }
}

/// Product of the tangent weights of `P(W_i)` at `q_j`.
pub fn euler_class(i: u32, j: u32) -> ZWeightPoly {
    let wj = &weight_factor::<Int>(Weights::H, i, j) - &ZWeightPoly::var(Weights::H);
    let tangent: Vec<_> = (0..=i)
        .filter(|&k| k != j)
        .map(|k| &(&weight_factor::<Int>(Weights::H, i, k) - &ZWeightPoly::var(Weights::H)) - &wj)
        .collect();
    Poly::product(&tangent)
}

/// `(-1)^j j! (i-j)! (l2 - l1)^i`.
pub fn euler_class_closed_form(i: u32, j: u32) -> ZWeightPoly {
    let mut c = factorial(j) * factorial(i - j);
    if j % 2 == 1 {
        c = -c;
    }
    weight_diff::<Int>().pow(i).scale(&c)
}

/// A localization sum before the common denominator is cleared.
#[derive(Clone, Debug)]
pub struct LocalizationSum {
    pub i: u32,
    pub d: u32,
    pub r: u32,
    /// `sum_j (-1)^j C(i,j) q'(rho_j) * prod_{vanishing m} L_m^{r+1}` with `q'`
    /// the integer form of `q`.
    pub numerator: ZWeightPoly,
    /// Power of `(l2 - l1)` in the denominator; always `i`.
    pub denominator_power: u32,
    /// Integer scale in the denominator: `i!` times the lcm of the
    /// denominators of `q`.
    pub scale: BigInt,
}

impl LocalizationSum {
    /// Forms the sum for the class `q` (a polynomial in `h, l1, l2`). With
    /// `specialize`, `H` is replaced by `(d+1)/2 c1` factor by factor before
    /// multiplying.
    pub fn build(
        q: &WeightPoly,
        i: u32,
        d: u32,
        r: u32,
        sign: RestrictionSign,
        specialize: bool,
    ) -> Result<Self> {
        if i == 0 || i > d {
            return Err(Error::IndexError(format!("envelope index i = {i} must satisfy 1 <= i <= d = {d}")));
        }
        if q.involves(Weights::H) {
            return Err(Error::DomainError("the left-factor class must not involve H".into()));
        }
        let (q_int, q_den) = q.clear_denominators();
        let h_sub = if specialize { Some(h_value::<Int>(d)?) } else { None };

        let factor = |m: u32| -> ZWeightPoly {
            let f = weight_factor::<Int>(Weights::H, d, m);
            match &h_sub {
                Some(v) => f.substitute(Weights::H, v),
                None => f,
            }
        };
        let powered: Vec<ZWeightPoly> = (0..=d).map(|m| factor(m).pow(r + 1)).collect();

        let mut numerator = ZWeightPoly::zero();
        for j in 0..=i {
            debug_assert_eq!(euler_class(i, j), euler_class_closed_form(i, j));
            let rho = fixed_point_restriction(i, j, sign);
            let q_at = q_int.substitute(Weights::SMALL_H, &rho);
            if q_at.is_zero() {
                continue;
            }
            // coordinates m in [j, d-i+j] survive; the rest vanish
            let image = Poly::product(
                (0..=d)
                    .filter(|&m| m < j || m > d - i + j)
                    .map(|m| &powered[m as usize]),
            );
            let mut c = binomial(i, j);
            if j % 2 == 1 {
                c = -c;
            }
            numerator += &(&q_at * &image).scale(&c);
        }
        Ok(LocalizationSum {
            i,
            d,
            r,
            numerator,
            denominator_power: i,
            scale: factorial(i) * q_den,
        })
    }

    /// Clears `(l2 - l1)^i` exactly and applies the scale. The result is a
    /// polynomial; a remainder signals an upstream bug.
    pub fn resolve(&self) -> Result<WeightPoly> {
        let cleared = divide_by_weight_diff(&self.numerator, self.denominator_power)?;
        let inv = BigRational::new(BigInt::one(), self.scale.clone());
        Ok(cleared.to_rational().scale(&inv))
    }
}

/// `pi_{i*}(q(h))` as a class in `Q[H, l1, l2]`, with `H` left formal.
pub fn localize_pushforward(q: &WeightPoly, i: u32, d: u32, r: u32) -> Result<WeightPoly> {
    LocalizationSum::build(q, i, d, r, PINNED_SIGN, false)?.resolve()
}

/// Same as [`localize_pushforward`] with `H = (d+1)/2 c1` applied, so the
/// result lies in `Q[l1, l2]`. Requires odd `d`.
pub fn localize_specialized(
    q: &WeightPoly,
    i: u32,
    d: u32,
    r: u32,
    sign: RestrictionSign,
) -> Result<WeightPoly> {
    require_odd(d)?;
    LocalizationSum::build(q, i, d, r, sign, true)?.resolve()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rat;
    use crate::weight::{divisible_locus, specialize_h, symmetrize_to_chern};

    #[test]
    fn euler_identity() {
        for i in 1..=6 {
            for j in 0..=i {
                assert_eq!(euler_class(i, j), euler_class_closed_form(i, j), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn degree_one_map_pushes_one_to_one() {
        for d in 1..=4 {
            let p = localize_pushforward(&WeightPoly::one(), d, d, 0).unwrap();
            assert!(p.is_one(), "d={d}: {p}");
        }
    }

    #[test]
    fn divisible_locus_pushforward() {
        // P(W1) x P(W1) -> P(W2), class h + l1
        let q = divisible_locus::<Rat>(Weights::SMALL_H, 1, 1);
        let p = localize_pushforward(&q, 1, 2, 0).unwrap();
        assert_eq!(p, divisible_locus::<Rat>(Weights::H, 2, 1));
    }

    #[test]
    fn fundamental_class_degree_is_binomial() {
        let p = localize_specialized(&WeightPoly::one(), 2, 5, 0, PINNED_SIGN).unwrap();
        assert_eq!(symmetrize_to_chern(&p).unwrap().to_integer().unwrap(), crate::poly::ZChern::from_i64(10));
    }

    #[test]
    fn specializing_early_or_late_agrees() {
        let q = WeightPoly::var(Weights::SMALL_H).pow(2);
        let late = specialize_h(&localize_pushforward(&q, 2, 3, 1).unwrap(), 3).unwrap();
        let early = localize_specialized(&q, 2, 3, 1, PINNED_SIGN).unwrap();
        assert_eq!(late, early);
    }

    #[test]
    fn index_errors() {
        let one = WeightPoly::one();
        assert!(matches!(localize_pushforward(&one, 0, 3, 0), Err(Error::IndexError(_))));
        assert!(matches!(localize_pushforward(&one, 4, 3, 0), Err(Error::IndexError(_))));
        assert_eq!(localize_specialized(&one, 1, 2, 0, PINNED_SIGN).unwrap_err(), Error::EvenDegree(2));
    }
}
