//! `gcd_{0<a<i} C(i, a)` is `p` when `i = p^k` and `1` otherwise; this is
//! what lets `alpha_{i,0}` be dropped unless `i` is a prime power.

use num_integer::Integer;
use num_traits::One;

use crate::coeff::{binomial, Int};
use crate::error::{Error, Result};

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}

/// `Some(p)` if `n = p^k` with `p` prime and `k >= 1`.
pub fn prime_power_base(n: u32) -> Option<u32> {
    let p = (2..=n).find(|p| n.is_multiple_of(*p))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p)
}

pub fn prime_divisors(n: u32) -> Vec<u32> {
    (2..=n).filter(|&p| n.is_multiple_of(p) && is_prime(p)).collect()
}

/// `gcd` of `C(i, a)` for `0 < a < i`. Needs `i >= 2`.
pub fn binomial_gcd(i: u32) -> Result<Int> {
    if i < 2 {
        return Err(Error::DomainError(format!("binomial gcd needs i >= 2, got {i}")));
    }
    let mut g = Int::from(0);
    for a in 1..i {
        g = g.gcd(&binomial(i, a));
        if g.is_one() {
            break;
        }
    }
    Ok(g)
}

/// The value predicted by Lucas's theorem.
pub fn lucas_prediction(i: u32) -> Int {
    Int::from(prime_power_base(i).unwrap_or(1))
}
