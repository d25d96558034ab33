//! Scalar abstraction shared by all exact computations.
//!
//! Every vector and matrix type in this crate is generic over an integer
//! type implementing [`Int`]. Arbitrary precision (`BigInt`) is the default
//! through the aliases at the crate root; machine integers (`i64`, `i128`)
//! are useful for brute-force enumerations where the values stay small.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer arithmetic.
pub trait Int:
    Integer
    + Signed
    + Roots
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("integer type cannot represent an i64 value")
    }

    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("integer type cannot represent a usize value")
    }
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Roots
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Exact rational over the scalar type.
pub type Rational<T> = Ratio<T>;

pub(crate) fn int<T: Int>(v: i64) -> T {
    T::from_i64_exact(v)
}

/// `ceil(cbrt(x))` for `x >= 0`, exact.
pub(crate) fn cbrt_ceil<T: Int>(x: &T) -> T {
    debug_assert!(!x.is_negative());
    let r = x.cbrt();
    if r.clone() * r.clone() * r.clone() == *x {
        r
    } else {
        r + T::one()
    }
}

/// Largest integer `m` with `m^3 < x`, for `x >= 1`.
pub(crate) fn largest_cube_below<T: Int>(x: &T) -> T {
    debug_assert!(*x >= T::one());
    let r = x.cbrt();
    if r.clone() * r.clone() * r.clone() == *x {
        r - T::one()
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn cube_roots_are_exact() {
        assert_eq!(cbrt_ceil(&27i64), 3);
        assert_eq!(cbrt_ceil(&28i64), 4);
        assert_eq!(cbrt_ceil(&0i64), 0);
        assert_eq!(largest_cube_below(&27i64), 2);
        assert_eq!(largest_cube_below(&28i64), 3);
        assert_eq!(largest_cube_below(&1i64), 0);
        let big = BigInt::from(10u64).pow(30u32);
        assert_eq!(cbrt_ceil(&big), BigInt::from(10u64).pow(10u32));
    }
}
