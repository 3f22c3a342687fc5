//! Ordered-field abstraction shared by the exact and floating-point code paths.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, ToPrimitive};

/// A computable ordered field.
///
/// Exact implementations (rationals, algebraic numbers) decide every comparison
/// exactly; the float implementations exist for projection and rendering only.
pub trait OrderedField: Num + Neg<Output = Self> + Clone + PartialOrd + Debug {
    /// Embeds an integer.
    fn from_int(n: i64) -> Self;

    /// Largest integer not exceeding `self`.
    fn floor_int(&self) -> i64;

    /// Nearest `f64` (used for reporting and drawing).
    fn approx_f64(&self) -> f64;

    /// Whether comparisons on this type are exact.
    fn is_exact() -> bool;
}

impl OrderedField for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn floor_int(&self) -> i64 {
        self.floor() as i64
    }
    fn approx_f64(&self) -> f64 {
        *self
    }
    fn is_exact() -> bool {
        false
    }
}

impl OrderedField for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }
    fn floor_int(&self) -> i64 {
        self.floor() as i64
    }
    fn approx_f64(&self) -> f64 {
        *self as f64
    }
    fn is_exact() -> bool {
        false
    }
}

impl OrderedField for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn floor_int(&self) -> i64 {
        self.floor().to_integer().to_i64().expect("floor out of i64 range")
    }
    fn approx_f64(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
    fn is_exact() -> bool {
        true
    }
}

impl OrderedField for Ratio<i64> {
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(n)
    }
    fn floor_int(&self) -> i64 {
        self.numer().div_floor(self.denom())
    }
    fn approx_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
    fn is_exact() -> bool {
        true
    }
}

/// Shorthand for an integer as a big rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d` as a big rational.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
