//! Coefficient fields.
//!
//! Everything in this crate is generic over a coefficient type implementing
//! [`Coefficient`]. The classification itself always runs over
//! [`Rational`](crate::Rational); smaller exact fields such as
//! `Ratio<i64>` are handy in tests. Floating point types satisfy the trait
//! bounds too, but Gröbner computations rely on exact zero tests and give
//! meaningless answers over `f32`/`f64`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A field of coefficients.
///
/// Blanket-implemented for every type that is a signed `num_traits::Num`
/// with the usual auxiliary traits, so `BigRational` and `Ratio<i64>` both
/// qualify.
pub trait Coefficient:
    Num + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
    /// The multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        Self::one() / self.clone()
    }

    /// `true` when `self` is the integer 1 or -1.
    fn is_unit_sign(&self) -> bool {
        self.abs().is_one()
    }

    /// Builds `num / den` from decimal digit strings; used by the parser so
    /// that arbitrary-size literals work for any field.
    fn from_decimal_ratio(num: &str, den: Option<&str>) -> Option<Self> {
        let n: Self = decimal(num)?;
        match den {
            None => Some(n),
            Some(d) => {
                let d: Self = decimal(d)?;
                if d.is_zero() {
                    None
                } else {
                    Some(n / d)
                }
            }
        }
    }
}

impl<T> Coefficient for T where
    T: Num + Signed + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
}

fn decimal<T: Coefficient>(digits: &str) -> Option<T> {
    if digits.is_empty() {
        return None;
    }
    let ten = T::from_u32(10)?;
    let mut acc = T::zero();
    for ch in digits.chars() {
        let d = ch.to_digit(10)?;
        acc = acc * ten.clone() + T::from_u32(d)?;
    }
    Some(acc)
}

/// Exact rational numbers with arbitrary-precision numerator and denominator.
pub type Rational = Ratio<BigInt>;

/// Shorthand for building a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
