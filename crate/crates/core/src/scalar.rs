//! Scalar fields used by the dense linear algebra and the Higgs matrix model.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, Zero};

/// A field the Gaussian elimination in [`crate::linalg`] can run over.
///
/// Exact types answer [`Scalar::is_negligible`] with an equality test. The
/// float impls use a fixed absolute threshold and are only suitable for
/// smoke tests; every check in this crate instantiates an exact type.
pub trait Scalar: Num + Signed + Clone + Debug + Display + Send + Sync + 'static {
    /// `true` if the value must be treated as zero during pivoting.
    fn is_negligible(&self) -> bool;

    /// `true` when arithmetic on this type is exact.
    fn is_exact() -> bool;

    fn from_i64(v: i64) -> Self;

    fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Scalar for BigRational {
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn is_exact() -> bool {
        true
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl Scalar for Ratio<i64> {
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn is_exact() -> bool {
        true
    }

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn from_fraction(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
}

impl Scalar for f64 {
    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-9
    }

    fn is_exact() -> bool {
        false
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for f32 {
    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-4
    }

    fn is_exact() -> bool {
        false
    }

    fn from_i64(v: i64) -> Self {
        v as f32
    }
}
