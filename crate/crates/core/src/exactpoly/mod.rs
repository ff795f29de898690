//! Exact rational arithmetic: dense univariate polynomials, small dense
//! matrices, and the integer sequences the rest of the crate is built on.

mod combinat;
mod matrix;
mod poly;

pub use combinat::{binomial, elementary_symmetric_prefix, power_sum};
pub use matrix::RationalMatrix;
pub use poly::{RationalPoly, Sign};

use num_bigint::BigInt;

/// Exact rational number with a positive denominator in lowest terms.
pub type Rational = num_rational::BigRational;

/// `num / den` as a [`Rational`]. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `v` as a [`Rational`].
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Lifts a big integer into the rationals.
pub fn big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}
