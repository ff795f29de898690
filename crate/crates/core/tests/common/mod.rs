#![allow(dead_code)]

use narayana_css::exactpoly::rat;
use narayana_css::{Rational, RationalPoly};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

/// Seed for every property test; `PROPTEST_RNG_SEED` overrides the default 0.
pub fn seed() -> u64 {
    std::env::var("PROPTEST_RNG_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0)
}

pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed()), failure_persistence: None, ..Config::default() }
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(a, b)| rat(a, b))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=40, 1i64..=12, any::<bool>()).prop_map(|(a, b, neg)| rat(if neg { -a } else { a }, b))
}

pub fn poly(max_degree: usize) -> impl Strategy<Value = RationalPoly> {
    vec(rational(), 1..=max_degree + 1).prop_map(RationalPoly::new)
}
