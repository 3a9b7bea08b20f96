//! The coefficient-field abstraction shared by every module.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ScalarError;

/// A field of coefficients: `RatFunc` for exact symbolic work, `BigRational` for probes.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn from_bigint(v: BigInt) -> Self;

    fn from_rational(v: &BigRational) -> Self;

    fn checked_div(&self, other: &Self) -> Result<Self, ScalarError>;

    /// Canonical text form, parseable by [`Coeff::parse_canonical`].
    fn to_canonical(&self) -> String;

    fn parse_canonical(s: &str) -> Result<Self, ScalarError>;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(BigInt::from(v))
    }

    fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        Self::one().checked_div(self)
    }

    fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out *= self;
        }
        out
    }

    /// Rough size used to pick cheap pivots in elimination.
    fn complexity(&self) -> usize {
        1
    }

    /// Multiply by a small integer.
    fn scale_i64(&self, k: i64) -> Self {
        if k == 1 {
            return self.clone();
        }
        self.clone() * Self::from_i64(k)
    }
}

impl Coeff for BigRational {
    fn from_bigint(v: BigInt) -> Self {
        BigRational::from_integer(v)
    }

    fn complexity(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }

    fn from_rational(v: &BigRational) -> Self {
        v.clone()
    }

    fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self / other)
    }

    fn to_canonical(&self) -> String {
        self.to_string()
    }

    fn parse_canonical(s: &str) -> Result<Self, ScalarError> {
        parse_rational(s)
    }
}

/// Parse `"3"`, `"-3/4"` (whitespace tolerated).
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || ScalarError::Parse(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip() {
        let q = BigRational::from_ratio(-6, 8);
        let s = q.to_canonical();
        assert_eq!(s, "-3/4");
        assert_eq!(BigRational::parse_canonical(&s).unwrap(), q);
    }

    #[test]
    fn rational_division_by_zero() {
        let one = BigRational::one();
        assert!(matches!(one.checked_div(&BigRational::zero()), Err(ScalarError::DivisionByZero)));
    }
}
