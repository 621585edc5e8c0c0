//! Exact scalar types used for characteristic vectors.
//!
//! Root data is always integral; characteristics (elements of a Cartan
//! subalgebra written through their evaluations on the simple roots) may be
//! rational in intermediate steps. Everything that manipulates them is generic
//! over [`Scalar`] so callers can pick machine integers, `i64` rationals or
//! big rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use std::fmt::{Debug, Display};

/// An exact ordered ring element that embeds the integers.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Signed + FromPrimitive + Send + Sync
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer embeds into every scalar")
    }

    /// The value as an integer, when it is one.
    fn as_integer(&self) -> Option<i64>;
}

impl Scalar for i64 {
    fn as_integer(&self) -> Option<i64> {
        Some(*self)
    }
}

impl Scalar for i128 {
    fn as_integer(&self) -> Option<i64> {
        i64::try_from(*self).ok()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Debug + Display + Integer + Signed + FromPrimitive + ToPrimitive + Send + Sync,
    Ratio<T>: Signed + FromPrimitive,
{
    fn as_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

// BigInt is kept usable as a scalar for callers that need unbounded entries.
impl Scalar for BigInt {
    fn as_integer(&self) -> Option<i64> {
        self.to_i64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigRational, Rational};

    #[test]
    fn integer_detection() {
        assert_eq!(Rational::new(4, 2).as_integer(), Some(2));
        assert_eq!(Rational::new(1, 2).as_integer(), None);
        assert_eq!(BigRational::from_int(-7).as_integer(), Some(-7));
        assert_eq!(5i128.as_integer(), Some(5));
    }
}
