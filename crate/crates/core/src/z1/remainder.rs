//! The remainder identities behind the recursion, and the functional
//! equations the two series satisfy.

use crate::coeff::Int;
use crate::error::{require_odd, Error, Result};
use crate::poly::{Poly, Weights, ZChern, ZWeightPoly};
use crate::weight::{h_value, p_d, symmetrize_to_chern, weight_factor};

use super::{genfun_series, lin};

/// The four quotients `R_{1,k,e} / P_{d-2}`, where `R_{1,k,0} + R_{1,k,1} h`
/// is the remainder of `h^k P_{d-1}(H - h)` at `H = (d+1)/2 c1` modulo
/// `h^2 - c1 h + c2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemainderQuotients {
    pub r100: ZChern,
    pub r101: ZChern,
    pub r110: ZChern,
    pub r111: ZChern,
}

impl RemainderQuotients {
    /// The closed forms `(d+1)/2 c1`, `-d`, `d c2`, `(1-d)/2 c1`.
    pub fn expected(d: u32) -> Result<Self> {
        require_odd(d)?;
        let d = d as i64;
        Ok(RemainderQuotients {
            r100: lin(0, (d + 1) / 2, 0),
            r101: ZChern::from_i64(-d),
            r110: lin(0, 0, d),
            r111: lin(0, (1 - d) / 2, 0),
        })
    }
}

/// Reduces a polynomial in `h` modulo `h^2 + (l1 + l2) h + l1 l2`, which is
/// `h^2 - c1 h + c2`. Returns the coefficients of `1` and `h`.
fn reduce_mod_quadratic(p: &ZWeightPoly) -> (ZWeightPoly, ZWeightPoly) {
    let s = &ZWeightPoly::var(Weights::L1) + &ZWeightPoly::var(Weights::L2);
    let t = &ZWeightPoly::var(Weights::L1) * &ZWeightPoly::var(Weights::L2);
    let mut parts = p.coefficients_in(Weights::SMALL_H);
    parts.resize(parts.len().max(2), ZWeightPoly::zero());
    for e in (2..parts.len()).rev() {
        let top = std::mem::take(&mut parts[e]);
        parts[e - 1] -= &(&s * &top);
        parts[e - 2] -= &(&t * &top);
    }
    (parts[0].clone(), parts[1].clone())
}

/// Computes the quotients and checks them against [`RemainderQuotients::expected`].
pub fn remainder_quotients(d: u32) -> Result<RemainderQuotients> {
    let expected = RemainderQuotients::expected(d)?;
    let shifted = &h_value::<Int>(d)? - &ZWeightPoly::var(Weights::SMALL_H);
    let factors: Vec<_> = (0..d)
        .map(|k| weight_factor::<Int>(Weights::H, d - 1, k).substitute(Weights::H, &shifted))
        .collect();
    let p = Poly::product(&factors);
    let divisor = p_d(d as i64 - 2)?;

    let quotient = |part: &ZWeightPoly| -> Result<ZChern> { symmetrize_to_chern(part)?.exact_div(&divisor) };
    let (r0, r1) = reduce_mod_quadratic(&p);
    let (s0, s1) = reduce_mod_quadratic(&(&p * &ZWeightPoly::var(Weights::SMALL_H)));
    let got = RemainderQuotients {
        r100: quotient(&r0)?,
        r101: quotient(&r1)?,
        r110: quotient(&s0)?,
        r111: quotient(&s1)?,
    };
    if got != expected {
        return Err(Error::IdentityViolated {
            d,
            what: format!("remainder quotients {got:?}, expected {expected:?}"),
        });
    }
    Ok(got)
}

/// Checks, up to degree `bound`, the system
///
/// ```text
/// A10 - d          = (1-d)/2 c1 A10 + d A11
/// A11 - (d+1)/2 c1 = -d c2 A10 + (d+1)/2 c1 A11
/// ```
///
/// for the series assembled from the generating-function slices.
pub fn functional_equation_holds(d: u32, bound: u32) -> Result<bool> {
    require_odd(d)?;
    let a10 = genfun_series(0, d, bound)?.into_poly();
    let a11 = genfun_series(1, d, bound)?.into_poly();
    let di = d as i64;
    let dd = ZChern::from_i64(di);
    let lo = lin(0, (1 - di) / 2, 0);
    let hi = lin(0, (di + 1) / 2, 0);

    let lhs0 = &a10 - &dd;
    let rhs0 = (&(&lo * &a10) + &(&dd * &a11)).truncate(bound);
    let lhs1 = &a11 - &hi;
    let rhs1 = (&(&lin(0, 0, -di) * &a10) + &(&hi * &a11)).truncate(bound);
    Ok(lhs0 == rhs0 && lhs1 == rhs1 && a10.constant_term() == Int::from(d) && a11.constant_term() == Int::from(0))
}
