//! The exact scalar fields the engine computes over.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

/// An exact ordered field of characteristic zero.
///
/// Every routine in this crate assumes `==` is exact equality and that
/// `a / b` is exact whenever `b != 0`. Floating-point types do not satisfy
/// that contract and are deliberately not implementors; the provided
/// implementations are the rational types `Ratio<i64>`, `Ratio<i128>` and
/// `Ratio<BigInt>`. Fixed-width ratios panic on overflow, so `BigRational`
/// is the default carrier (see [`crate::Rat`]).
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Signed + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    /// `n / d`; panics when `d == 0`.
    fn from_frac(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }

    fn to_big_rational(&self) -> BigRational;

    /// `None` when the value does not fit the carrier.
    fn from_big_rational(q: &BigRational) -> Option<Self>;

    /// Parses `"p/q"` or `"p"`.
    fn parse_rational(s: &str) -> Option<Self> {
        let q = BigRational::from_str(s.trim()).ok()?;
        Self::from_big_rational(&q)
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Display
        + Debug
        + Send
        + Sync
        + 'static
        + From<i64>
        + Into<BigInt>
        + TryFrom<BigInt>,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from(n))
    }

    fn to_big_rational(&self) -> BigRational {
        BigRational::new(self.numer().clone().into(), self.denom().clone().into())
    }

    fn from_big_rational(q: &BigRational) -> Option<Self> {
        let n = T::try_from(q.numer().clone()).ok()?;
        let d = T::try_from(q.denom().clone()).ok()?;
        Some(Ratio::new(n, d))
    }
}
