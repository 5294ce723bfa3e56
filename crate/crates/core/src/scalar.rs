//! Scalar abstractions.
//!
//! Everything that only adds and multiplies (polynomials, Pfaffian
//! expansion) is written against [`Ring`]; elimination-based routines
//! additionally need [`Field`]. Both are blanket-implemented, so
//! `BigInt`, `BigRational`, `i64` and `f64` all plug in directly.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Additive inverse by reference.
    fn negated(&self) -> Self {
        -self.clone()
    }

    /// `(-1)^k` as a ring element.
    fn sign(k: usize) -> Self {
        if k % 2 == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    fn from_i64(value: i64) -> Self {
        let mut acc = Self::zero();
        let unit = if value < 0 { -Self::one() } else { Self::one() };
        // repeated doubling keeps this logarithmic for generic rings
        let mut base = unit;
        let mut n = value.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc + &base;
            }
            base = base.clone() + &base;
            n >>= 1;
        }
        acc
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
{
}

/// A [`Ring`] with exact (or at least total) division by nonzero elements.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> {}
