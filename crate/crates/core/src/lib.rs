//! Exact Schur-Szegő composition, Narayana polynomials and their spectral
//! and asymptotic structure.

pub mod asymptotics;
pub mod css;
pub mod error;
pub mod exactpoly;
pub mod narayana;
pub mod roots;
pub mod spectra;

pub use error::{Error, Result};
pub use exactpoly::{Rational, RationalMatrix, RationalPoly, Sign};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-polynomials.md")]
    mod exact_polynomials {}
    #[doc = include_str!("../../../book/src/composition.md")]
    mod composition {}
    #[doc = include_str!("../../../book/src/narayana.md")]
    mod narayana {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    mod spectrum {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/asymptotics.md")]
    mod asymptotics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
