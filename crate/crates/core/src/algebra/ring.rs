use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number.
pub type Q = BigRational;

/// Commutative ring with identity.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_i64(k: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if k < 0 { Self::one().neg() } else { Self::one() };
        for _ in 0..k.unsigned_abs() {
            acc = acc.add(&unit);
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn from_i64(k: i64) -> Self {
        Q::from_integer(BigInt::from(k))
    }
}

impl Field for Q {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Formats a rational as `"num/den"`, or `"num"` when the denominator is 1.
pub fn format_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"num"` or `"num/den"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(Q::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((a, b)) => {
            let num = a.trim().parse::<BigInt>().map_err(|_| bad())?;
            let den = b.trim().parse::<BigInt>().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(num, den))
        }
    }
}
