mod common;

use common::{config, nonzero_rational, poly, rational};
use narayana_css::css::{
    build_phi, compose, compose_many, composition_factor, elementary_symmetric, factor_symmetric_functions,
    parameter_polynomial, FactorParam,
};
use narayana_css::exactpoly::int;
use narayana_css::spectra::eigenvalues_closed_form;
use narayana_css::{Rational, RationalPoly};
use num_traits::{One, Zero};
use proptest::collection::vec;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn composition_is_commutative_and_associative(p in poly(5), q in poly(5), r in poly(5)) {
        let m = 5;
        let pq = compose(&p, &q, m).unwrap();
        prop_assert_eq!(&pq, &compose(&q, &p, m).unwrap());
        let left = compose(&pq, &r, m).unwrap();
        prop_assert_eq!(&left, &compose(&p, &compose(&q, &r, m).unwrap(), m).unwrap());
        prop_assert_eq!(left, compose_many(&[p, q, r], m).unwrap());
    }

    #[test]
    fn shifted_power_is_the_identity(p in poly(6), extra in 0usize..3) {
        let m = 6 + extra;
        let id = RationalPoly::linear_power(Rational::one(), m);
        prop_assert_eq!(compose(&p, &id, m).unwrap(), p.clone());
        prop_assert_eq!(compose(&id, &p, m).unwrap(), p);
    }

    #[test]
    fn factorization_round_trip(params in vec(rational(), 2..6)) {
        let n = params.len() + 1;
        let factors: Vec<RationalPoly> = params
            .iter()
            .map(|a| composition_factor(FactorParam::Finite(a.clone()), n).unwrap())
            .collect();
        let p = compose_many(&factors, n).unwrap();
        let sigma = factor_symmetric_functions(&p, n).unwrap();
        prop_assert_eq!(&sigma, &elementary_symmetric(&params));
        // parameters are the negated roots of the parameter polynomial
        let pp = parameter_polynomial(&sigma);
        for a in &params {
            prop_assert!(pp.eval(&-a.clone()).is_zero());
        }
    }

    #[test]
    fn phi_is_affine(n in 3usize..8, c in vec(rational(), 7), d in vec(rational(), 7), t in nonzero_rational()) {
        let phi = build_phi(n).unwrap();
        let (c, d) = (&c[..n - 1], &d[..n - 1]);
        // Phi(c + t (d - c)) = Phi(c) + t (Phi(d) - Phi(c))
        let mix: Vec<Rational> = c.iter().zip(d).map(|(a, b)| a + &t * (b - a)).collect();
        let (pc, pd) = (phi.apply(c).unwrap(), phi.apply(d).unwrap());
        let expected: Vec<Rational> = pc.iter().zip(&pd).map(|(a, b)| a + &t * (b - a)).collect();
        prop_assert_eq!(phi.apply(&mix).unwrap(), expected);
    }
}

#[test]
fn infinite_parameter_factor() {
    for n in 2..6 {
        assert_eq!(
            composition_factor(FactorParam::Infinity, n).unwrap(),
            RationalPoly::linear_power(Rational::one(), n - 1)
        );
    }
}

#[test]
fn linear_part_spectrum() {
    for n in 3..=12 {
        let a = build_phi(n).unwrap().linear;
        for lambda in eigenvalues_closed_form(n).unwrap() {
            let shifted = a.shift_diagonal(&lambda);
            assert!(shifted.determinant().unwrap().is_zero(), "n={n}, lambda={lambda}");
            assert_eq!(shifted.kernel().len(), 1, "n={n}, lambda={lambda}");
        }
        // and nowhere else among nearby rationals
        for probe in [int(0), int(-1), Rational::new(3.into(), 2.into())] {
            if !eigenvalues_closed_form(n).unwrap().contains(&probe) {
                assert!(!a.shift_diagonal(&probe).determinant().unwrap().is_zero());
            }
        }
    }
}

#[test]
fn shifted_power_direction_has_eigenvalue_one() {
    for n in 3..=12 {
        let a = build_phi(n).unwrap().linear;
        let v: Vec<Rational> = RationalPoly::linear_power(Rational::one(), n - 2).coeffs().iter().rev().cloned().collect();
        assert_eq!(a.mul_vec(&v).unwrap(), v, "n={n}");
    }
}

#[test]
fn out_of_domain_inputs() {
    // x^3 + 2 does not vanish at -1
    let p = RationalPoly::from_i64s(&[2, 0, 0, 1]);
    assert!(factor_symmetric_functions(&p, 3).is_err());
    let not_monic = RationalPoly::from_i64s(&[2, 2, 2, 2]);
    assert!(factor_symmetric_functions(&not_monic, 3).is_err());
    assert!(compose(&RationalPoly::from_i64s(&[1, 1, 1]), &RationalPoly::one(), 1).is_err());
}
