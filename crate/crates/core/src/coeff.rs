//! Coefficient rings: arbitrary-precision integers and rationals.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use num_bigint::BigInt as Int;
pub use num_rational::BigRational as Rat;

/// An exact commutative coefficient ring.
pub trait Coeff:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + FromStr
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Short ring name used in reports ("Z" or "Q").
    const RING: &'static str;

    /// Exact quotient `self / rhs` in the ring, if it exists.
    fn try_div(&self, rhs: &Self) -> Option<Self>;

    fn is_unit(&self) -> bool;

    fn from_int(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_int(&BigInt::from(n))
    }
}

impl Coeff for BigInt {
    const RING: &'static str = "Z";

    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn from_int(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Coeff for BigRational {
    const RING: &'static str = "Q";

    fn try_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn from_int(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

/// `p/q` as a rational.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}
