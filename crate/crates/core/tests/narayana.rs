mod common;

use common::config;
use narayana_css::exactpoly::{int, Sign};
use narayana_css::narayana::{
    catalan, dyck_peak_count, narayana_column_poly, narayana_number, narayana_poly_direct,
    narayana_polys_recurrence, triangle_matrix,
};
use narayana_css::{Rational, RationalPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn recurrence_matches_closed_form() {
    let rec = narayana_polys_recurrence(60).unwrap();
    for (i, p) in rec.iter().enumerate() {
        assert_eq!(*p, narayana_poly_direct(i + 1).unwrap(), "n={}", i + 1);
    }
}

#[test]
fn reduced_polynomials_are_self_reciprocal() {
    for n in 1..=60 {
        let reduced = narayana_poly_direct(n).unwrap().exact_divide(&RationalPoly::x()).unwrap();
        assert_eq!(reduced.self_reciprocal_sign().unwrap(), Some(Sign::Plus), "n={n}");
    }
}

#[test]
fn catalan_and_dyck() {
    for n in 1..=30 {
        assert_eq!(narayana_poly_direct(n).unwrap().eval(&int(1)), Rational::from_integer(catalan(n)));
    }
    for n in 1..=12 {
        for k in 1..=n {
            assert_eq!(BigInt::from(dyck_peak_count(n, k).unwrap()), narayana_number(n, k).unwrap());
        }
    }
}

#[test]
fn columns_are_polynomials_in_n() {
    for k in 1..=4usize {
        let nodes: Vec<(Rational, Rational)> = (k..k + 2 * k - 1)
            .map(|n| (int(n as i64), Rational::from_integer(narayana_number(n, k).unwrap())))
            .collect();
        let fit = RationalPoly::interpolate(&nodes).unwrap();
        assert_eq!(fit.degree(), Some(2 * k - 2), "k={k}");
        if k > 1 {
            assert!(fit.eval(&int(0)) == Rational::from(BigInt::from(0)), "k={k}: {fit}");
        }
        for n in k..=40 {
            assert_eq!(fit.eval(&int(n as i64)), Rational::from_integer(narayana_number(n, k).unwrap()));
        }
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn triangle_rows(rows in 1usize..40) {
        let t = triangle_matrix(rows).unwrap();
        for n in 1..=rows {
            let row = t.row(n).unwrap();
            prop_assert_eq!(row.iter().sum::<BigInt>(), catalan(n));
            prop_assert!(row.iter().eq(row.iter().rev()));
        }
    }

    #[test]
    fn column_polynomial_values(m in 0usize..6, j in 1usize..30) {
        prop_assume!(j > m);
        let v = narayana_column_poly(m).eval(&int(j as i64));
        prop_assert_eq!(v, Rational::from_integer(narayana_number(j, m + 1).unwrap()));
    }
}
