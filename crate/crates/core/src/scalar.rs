//! Coefficient rings for characters.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::ToBigInt;
use num_traits::{FromPrimitive, Signed};

/// An exact signed integer type usable as a character coefficient.
///
/// Implemented for `i64`, `i128` and `BigInt`. The fixed-width types do not
/// guard against overflow; use `BigInt` unless inputs are known to be small.
pub trait Coefficient:
    Signed + Clone + Debug + Display + Eq + Ord + Hash + FromPrimitive + ToBigInt + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("every coefficient type holds i64")
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    fn checked_exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let q = self.clone() / divisor.clone();
        if q.clone() * divisor.clone() == *self {
            Some(q)
        } else {
            None
        }
    }
}

impl<T> Coefficient for T where
    T: Signed + Clone + Debug + Display + Eq + Ord + Hash + FromPrimitive + ToBigInt + Send + Sync + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn exact_division() {
        assert_eq!(6i64.checked_exact_div(&3), Some(2));
        assert_eq!(7i64.checked_exact_div(&3), None);
        assert_eq!(7i64.checked_exact_div(&0), None);
        assert_eq!((-6i128).checked_exact_div(&-2), Some(3));
        let big = BigInt::from(1u8) << 100usize;
        assert_eq!(big.checked_exact_div(&BigInt::from(2)), Some(BigInt::from(1u8) << 99usize));
    }
}
