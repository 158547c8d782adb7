//! The relations `alpha_{i,k}^{r,d}` for `1 <= i <= d`, `0 <= k <= i`:
//! the pushforward of `h^k` along the envelope map `pi_i`, with
//! `H = (d+1)/2 c1`, written in the Chern classes.

pub mod hadamard;
pub mod localization;
pub mod polynomiality;

use crate::error::{require_odd, Error, Result};
use crate::poly::{WeightPoly, Weights, ZChern};
use crate::weight::symmetrize_to_chern;

pub use hadamard::hadamard_alpha0;
pub use localization::{localize_pushforward, localize_specialized, RestrictionSign, PINNED_SIGN};
pub use polynomiality::{poly_in_d_check, PolyInD};

/// `alpha_{i,k}^{r,d}` by localization, under the given sign convention.
pub fn alpha_ik_with_sign(i: u32, k: u32, r: u32, d: u32, sign: RestrictionSign) -> Result<ZChern> {
    require_odd(d)?;
    if k > i {
        return Err(Error::IndexError(format!("k = {k} exceeds i = {i}")));
    }
    let q = WeightPoly::var(Weights::SMALL_H).pow(k);
    let pushed = localize_specialized(&q, i, d, r, sign)?;
    let alpha = symmetrize_to_chern(&pushed)?.to_integer()?;
    debug_assert!(alpha.is_zero() || alpha.homogeneous_degree() == Some(i * r + k));
    Ok(alpha)
}

/// `alpha_{i,k}^{r,d}`, homogeneous of degree `i r + k`.
pub fn alpha_ik(i: u32, k: u32, r: u32, d: u32) -> Result<ZChern> {
    alpha_ik_with_sign(i, k, r, d, PINNED_SIGN)
}

pub fn alpha_i0(i: u32, r: u32, d: u32) -> Result<ZChern> {
    alpha_ik(i, 0, r, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> ZChern {
        ZChern::parse(s).unwrap()
    }

    #[test]
    fn twisted_cubic_relations() {
        assert_eq!(alpha_ik(1, 0, 2, 3).unwrap(), z("9c1^2 - 27c2"));
        assert_eq!(alpha_ik(1, 1, 2, 3).unwrap(), z("8c1^3 - 27c1c2"));
        assert_eq!(alpha_ik(2, 0, 2, 3).unwrap(), z("12c1^4 - 90c1^2c2 + 189c2^2"));
        assert_eq!(alpha_ik(3, 0, 2, 3).unwrap(), z("4c1^6 - 42c1^4c2 + 129c1^2c2^2 - 90c2^3"));
    }

    #[test]
    fn opposite_sign_flips_odd_powers_of_h() {
        let neg = alpha_ik_with_sign(1, 1, 2, 3, RestrictionSign::Negative).unwrap();
        let pos = alpha_ik_with_sign(1, 1, 2, 3, RestrictionSign::Positive).unwrap();
        assert_eq!(pos, -neg);
    }

    #[test]
    fn r_zero_gives_binomials() {
        for i in 1..=5 {
            let expected = ZChern::constant(crate::coeff::binomial(5, i));
            assert_eq!(alpha_i0(i, 0, 5).unwrap(), expected);
        }
    }

    #[test]
    fn input_validation() {
        assert_eq!(alpha_ik(1, 0, 1, 4), Err(Error::EvenDegree(4)));
        assert!(matches!(alpha_ik(1, 2, 1, 3), Err(Error::IndexError(_))));
        assert!(matches!(alpha_ik(4, 0, 1, 3), Err(Error::IndexError(_))));
    }
}
