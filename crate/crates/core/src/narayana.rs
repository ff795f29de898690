//! Narayana numbers, the Narayana triangle, Narayana polynomials (closed form
//! and three-term recurrence), Catalan numbers, and an exhaustive Dyck-path
//! oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{big, binomial, int, RationalPoly, Rational};

/// Largest semilength the Dyck-path enumeration accepts.
pub const DYCK_ORACLE_LIMIT: usize = 14;

/// `N(n, k) = C(n, k-1) C(n, k) / n` for `1 <= k <= n`.
pub fn narayana_number(n: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::InvalidIndex(format!("N({n}, {k}) needs 1 <= k <= n")));
    }
    let (ni, ki) = (n as i64, k as i64);
    let prod = binomial(ni, ki - 1) * binomial(ni, ki);
    let (q, r) = prod.div_rem(&BigInt::from(n));
    assert!(r.is_zero(), "C(n,k-1)C(n,k) must be divisible by n");
    Ok(q)
}

/// `N_n(x) = sum_k N(n, k) x^k` straight from the closed form.
pub fn narayana_poly_direct(n: usize) -> Result<RationalPoly> {
    if n == 0 {
        return Err(Error::InvalidInput("Narayana polynomials start at n = 1".into()));
    }
    let mut coeffs = vec![Rational::zero()];
    for k in 1..=n {
        coeffs.push(big(narayana_number(n, k)?));
    }
    Ok(RationalPoly::new(coeffs))
}

/// `N_1, ..., N_n` from `(m+1) N_m = (2m-1)(1+x) N_{m-1} - (m-2)(x-1)^2 N_{m-2}`
/// starting at `N_1 = x`, `N_2 = x^2 + x`. Each division by `m+1` is checked
/// to be exact over the integers.
pub fn narayana_polys_recurrence(n: usize) -> Result<Vec<RationalPoly>> {
    if n == 0 {
        return Err(Error::InvalidInput("Narayana polynomials start at n = 1".into()));
    }
    let mut out = vec![RationalPoly::x()];
    if n >= 2 {
        out.push(RationalPoly::from_i64s(&[0, 1, 1]));
    }
    let one_plus_x = RationalPoly::from_i64s(&[1, 1]);
    let x_minus_one_sq = RationalPoly::from_i64s(&[1, -2, 1]);
    for m in 3..=n {
        let mi = m as i64;
        let a = (&one_plus_x * &out[m - 2]).scale(&int(2 * mi - 1));
        let b = (&x_minus_one_sq * &out[m - 3]).scale(&int(mi - 2));
        let numer = &a - &b;
        let divisor = BigInt::from(m + 1);
        if numer.coeffs().iter().any(|c| !c.is_integer() || !c.numer().is_multiple_of(&divisor)) {
            return Err(Error::RecurrenceViolation(m));
        }
        out.push(numer.scale(&Rational::new(BigInt::one(), divisor)));
    }
    Ok(out)
}

/// `N_n(x)` from the three-term recurrence.
pub fn narayana_poly_recurrence(n: usize) -> Result<RationalPoly> {
    Ok(narayana_polys_recurrence(n)?.pop().expect("n >= 1"))
}

/// `Cat_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

/// Number of Dyck paths of semilength `n` grouped by peak count: entry `k`
/// counts paths with exactly `k` peaks (an up-step immediately followed by a
/// down-step). Exhaustive; `n <= 14`.
pub fn dyck_peak_distribution(n: usize) -> Result<Vec<u64>> {
    if n > DYCK_ORACLE_LIMIT {
        return Err(Error::OracleTooLarge { n, limit: DYCK_ORACLE_LIMIT });
    }
    let mut counts = vec![0u64; n + 1];
    // explicit stack of (ups, downs, last_was_up, peaks)
    let mut stack = vec![(0usize, 0usize, false, 0usize)];
    while let Some((ups, downs, last_up, peaks)) = stack.pop() {
        if ups == n && downs == n {
            counts[peaks] += 1;
            continue;
        }
        if ups < n {
            stack.push((ups + 1, downs, true, peaks));
        }
        if downs < ups {
            stack.push((ups, downs + 1, false, peaks + usize::from(last_up)));
        }
    }
    Ok(counts)
}

/// Number of Dyck paths of semilength `n` with exactly `k` peaks, by
/// enumeration.
pub fn dyck_peak_count(n: usize, k: usize) -> Result<u64> {
    if k == 0 || k > n {
        return Err(Error::InvalidIndex(format!("peak count {k} outside 1..={n}")));
    }
    Ok(dyck_peak_distribution(n)?[k])
}

/// Rows `1..=R` of the Narayana triangle; row `n` holds `N(n,1)..N(n,n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NarayanaTriangle {
    pub rows: Vec<Vec<BigInt>>,
}

impl NarayanaTriangle {
    /// Row `n` (1-based).
    pub fn row(&self, n: usize) -> Option<&[BigInt]> {
        n.checked_sub(1).and_then(|i| self.rows.get(i)).map(Vec::as_slice)
    }

    /// Entry of the lower-triangular matrix layout at 1-based `(row, col)`,
    /// zero above the diagonal.
    pub fn matrix_entry(&self, row: usize, col: usize) -> BigInt {
        self.row(row)
            .and_then(|r| col.checked_sub(1).and_then(|c| r.get(c)))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }
}

pub fn triangle_matrix(rows: usize) -> Result<NarayanaTriangle> {
    if rows == 0 {
        return Err(Error::InvalidInput("triangle needs at least one row".into()));
    }
    let rows = (1..=rows)
        .map(|n| {
            narayana_poly_direct(n)
                .map(|p| p.coeffs()[1..].iter().map(|c| c.numer().clone()).collect())
        })
        .collect::<Result<_>>()?;
    Ok(NarayanaTriangle { rows })
}

/// Column `m + 1` of the triangle as a polynomial in the row index `j`:
/// `((j-1)...(j-m+1) / m!) * (j(j-1)...(j-m) / (m+1)!)`.
pub fn narayana_column_poly(m: usize) -> RationalPoly {
    if m == 0 {
        return RationalPoly::one();
    }
    let falling = |from: i64, count: usize| {
        (0..count).fold(RationalPoly::one(), |acc, i| &acc * &RationalPoly::linear(int(-(from + i as i64))))
    };
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |a, i| a * i);
    let left = falling(1, m - 1);
    let right = falling(0, m + 1);
    let denom = big(fact(m) * fact(m + 1));
    (&left * &right).scale(&denom.recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_from_the_triangle() {
        assert_eq!(narayana_number(4, 2).unwrap(), BigInt::from(6));
        assert_eq!(narayana_number(5, 3).unwrap(), BigInt::from(20));
        for n in 1..20 {
            assert_eq!(narayana_number(n, 1).unwrap(), BigInt::one());
        }
        assert!(narayana_number(3, 4).is_err());
        assert!(narayana_number(3, 0).is_err());
    }

    #[test]
    fn direct_polynomials() {
        assert_eq!(narayana_poly_direct(2).unwrap(), RationalPoly::from_i64s(&[0, 1, 1]));
        assert_eq!(narayana_poly_direct(3).unwrap(), RationalPoly::from_i64s(&[0, 1, 3, 1]));
        assert_eq!(narayana_poly_direct(4).unwrap(), RationalPoly::from_i64s(&[0, 1, 6, 6, 1]));
        assert!(narayana_poly_direct(0).is_err());
    }

    #[test]
    fn recurrence_polynomials() {
        assert_eq!(narayana_poly_recurrence(1).unwrap(), RationalPoly::x());
        assert_eq!(narayana_poly_recurrence(3).unwrap(), RationalPoly::from_i64s(&[0, 1, 3, 1]));
        assert_eq!(
            narayana_poly_recurrence(5).unwrap(),
            RationalPoly::from_i64s(&[0, 1, 10, 20, 10, 1])
        );
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), BigInt::one());
        assert_eq!(catalan(3), BigInt::from(5));
        assert_eq!(catalan(4), BigInt::from(14));
    }

    #[test]
    fn dyck_oracle() {
        assert_eq!(dyck_peak_count(3, 2).unwrap(), 3);
        assert_eq!(dyck_peak_count(4, 2).unwrap(), 6);
        for n in 1..=8 {
            assert_eq!(dyck_peak_count(n, n).unwrap(), 1);
        }
        assert_eq!(dyck_peak_distribution(4).unwrap().iter().sum::<u64>(), 14);
        assert_eq!(
            dyck_peak_count(15, 1),
            Err(Error::OracleTooLarge { n: 15, limit: DYCK_ORACLE_LIMIT })
        );
    }

    #[test]
    fn triangle_block() {
        let t = triangle_matrix(5).unwrap();
        let expected: Vec<Vec<i64>> =
            vec![vec![1], vec![1, 1], vec![1, 3, 1], vec![1, 6, 6, 1], vec![1, 10, 20, 10, 1]];
        for (row, exp) in t.rows.iter().zip(&expected) {
            let exp: Vec<BigInt> = exp.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(row, &exp);
        }
        assert_eq!(t.matrix_entry(2, 3), BigInt::zero());
        assert_eq!(t.matrix_entry(5, 3), BigInt::from(20));
    }

    #[test]
    fn column_polynomial_values() {
        let t = triangle_matrix(12).unwrap();
        for m in 0..5 {
            let col = narayana_column_poly(m);
            assert_eq!(col.degree(), Some(2 * m));
            for j in (m + 1)..=12 {
                assert_eq!(col.eval(&int(j as i64)), big(t.matrix_entry(j, m + 1)), "m={m} j={j}");
            }
        }
    }
}
